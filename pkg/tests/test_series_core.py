import pytest
from hypothesis import given
from hypothesis import strategies as st

from geode import (
    TruncatedSeries,
    TypeVector,
    enumerate_types,
    grading_key,
    mismatches_between,
    sum_of_variables,
)
from oracles import partition_counts

V = TypeVector


def test_edge_weight_examples():
    assert V(()).edge_weight == 0
    assert V((0, 2)).edge_weight == 4
    assert V((2, 3, 2, 1)).edge_weight == 18


def test_leaf_count_examples():
    assert V(()).leaf_count == 1
    assert V((0, 2)).leaf_count == 3
    assert V((2, 3, 2, 1)).leaf_count == 11


entry_vectors = st.lists(st.integers(min_value=0, max_value=5), max_size=6).map(tuple)


@given(entry_vectors)
def test_grading_against_direct_sums(entries):
    m = V(entries)
    assert m.edge_weight == sum((i + 1) * e for i, e in enumerate(entries))
    assert m.leaf_count == 1 + sum(i * e for i, e in enumerate(entries))
    assert m.node_count == 1 + m.edge_weight


@given(entry_vectors)
def test_node_count_is_leaves_plus_internal(entries):
    m = V(entries)
    assert m.node_count == m.leaf_count + sum(m.entries)


def test_canonical_trimming():
    assert V((0, 1, 0)) == V((0, 1))
    assert V((0, 0)).entries == ()
    with pytest.raises(ValueError):
        V((1, -1))


def test_text_roundtrip():
    assert V.parse("") == V.zero()
    assert V.parse("2,3,2,1").text == "2,3,2,1"
    assert V.parse("0,1,0") == V((0, 1))
    assert str(V.zero()) == ""
    with pytest.raises(ValueError):
        V.parse("1,x")


def test_unit_and_arithmetic():
    assert V.unit(3) == V((0, 0, 1))
    assert V((1, 1)) + V.unit(1) == V((2, 1))
    assert V((2, 1)) - V.unit(2) == V((2,))
    with pytest.raises(ValueError):
        V((1,)) - V.unit(2)


def test_enumerate_types_small():
    assert enumerate_types(0) == [V.zero()]
    assert enumerate_types(2) == [V(()), V((1,)), V((2,)), V((0, 1))]
    # the weight-3 grade appends exactly (3), (1,1), (0,0,1) in that order
    assert enumerate_types(3) == [
        V(()),
        V((1,)),
        V((2,)),
        V((0, 1)),
        V((3,)),
        V((1, 1)),
        V((0, 0, 1)),
    ]
    assert len(enumerate_types(3)) == 7


@pytest.mark.parametrize("bound", range(10))
def test_enumerate_types_sorted_and_unique(bound):
    types = enumerate_types(bound)
    assert len(set(types)) == len(types)
    assert all(m.edge_weight <= bound for m in types)
    assert types == sorted(types, key=grading_key)


def test_enumerate_types_grade_sizes_match_partitions():
    expected = partition_counts(14)
    sizes = [len(enumerate_types(0))]
    for w in range(1, 15):
        sizes.append(len(enumerate_types(w)) - len(enumerate_types(w - 1)))
    assert sizes == expected


def test_series_addition_and_subtraction():
    a = TruncatedSeries(2, {V.zero(): 1, V((1,)): 2})
    b = TruncatedSeries(2, {V((1,)): 3, V((0, 1)): 1})
    assert a + b == TruncatedSeries(2, {V.zero(): 1, V((1,)): 5, V((0, 1)): 1})
    assert (a + b) - b == a
    assert a - a == TruncatedSeries.zero(2)


def test_series_hand_expansions():
    one_plus_t1 = TruncatedSeries(2, {V.zero(): 1, V.unit(1): 1})
    sq = one_plus_t1 * one_plus_t1
    assert sq == TruncatedSeries(2, {V.zero(): 1, V((1,)): 2, V((2,)): 1})

    t2 = TruncatedSeries.variable(2, bound=3)
    assert t2 * t2 == TruncatedSeries.zero(3)  # weight 4 truncated away

    s = TruncatedSeries(2, {V.zero(): 1, V((1,)): 1, V((0, 1)): 1})
    assert s * s == TruncatedSeries(
        2, {V.zero(): 1, V((1,)): 2, V((2,)): 1, V((0, 1)): 2}
    )


def test_bound_mismatch_is_an_error():
    a = TruncatedSeries.one(2)
    b = TruncatedSeries.one(3)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * b
    with pytest.raises(ValueError):
        mismatches_between(a, b)


def test_power_requires_positive_exponent():
    s = TruncatedSeries.one(2)
    with pytest.raises(ValueError):
        s.power(0)


def bounded_series(bound: int):
    types = enumerate_types(bound)
    return st.dictionaries(
        st.sampled_from(types), st.integers(min_value=-4, max_value=4), max_size=6
    ).map(lambda coeffs: TruncatedSeries(bound, coeffs))


@given(st.integers(0, 4).flatmap(lambda w: st.tuples(bounded_series(w), bounded_series(w))))
def test_mul_commutative(pair):
    a, b = pair
    assert a * b == b * a


@given(
    st.integers(0, 4).flatmap(
        lambda w: st.tuples(bounded_series(w), bounded_series(w), bounded_series(w))
    )
)
def test_mul_associative(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)


@given(st.integers(0, 4).flatmap(bounded_series), st.integers(1, 4))
def test_power_matches_repeated_multiplication(s, k):
    expected = s
    for _ in range(k - 1):
        expected = expected * s
    assert s.power(k) == expected


@given(st.integers(0, 5).flatmap(lambda w: st.tuples(st.just(w), bounded_series(w), bounded_series(w))))
def test_multiplication_is_graded(args):
    bound, a, b = args
    product = a * b
    assert all(m.edge_weight <= bound for m in product.support())


def test_sum_of_variables():
    s = sum_of_variables(3)
    assert s == TruncatedSeries(3, {V.unit(1): 1, V.unit(2): 1, V.unit(3): 1})


def test_mismatch_listing():
    a = TruncatedSeries(2, {V.zero(): 1, V((1,)): 2})
    b = TruncatedSeries(2, {V.zero(): 1, V((1,)): 3, V((0, 1)): 1})
    assert mismatches_between(a, b) == [(V((1,)), 2, 3), (V((0, 1)), 0, 1)]
