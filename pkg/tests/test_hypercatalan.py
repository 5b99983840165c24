import math

from geode import (
    TruncatedSeries,
    TypeVector,
    enumerate_trees,
    enumerate_types,
    hyper_catalan,
    hyper_catalan_series,
    verify_functional_equation,
)
from oracles import catalan_numbers

V = TypeVector


def test_catalan_specialization():
    values = [hyper_catalan(V((0, k))) for k in range(7)]
    assert values == [1, 1, 2, 5, 14, 42, 132]
    assert values == catalan_numbers(7)


def test_small_values():
    assert hyper_catalan(V.zero()) == 1
    assert hyper_catalan(V((0, 2))) == 2
    assert hyper_catalan(V((0, 3))) == 5
    # oracle: the three ordered trees with one unary and one binary node
    assert hyper_catalan(V((1, 1))) == 3
    assert len(enumerate_trees(V((1, 1)))) == 3


def test_division_is_exact_up_to_weight_18():
    for m in enumerate_types(18):
        numerator = math.factorial(m.edge_weight)
        denominator = math.factorial(m.leaf_count)
        for e in m.entries:
            denominator *= math.factorial(e)
        assert numerator % denominator == 0
        assert hyper_catalan(m) == numerator // denominator


def test_series_small_bounds():
    assert hyper_catalan_series(1) == TruncatedSeries(1, {V.zero(): 1, V((1,)): 1})
    assert hyper_catalan_series(2) == TruncatedSeries(
        2, {V.zero(): 1, V((1,)): 1, V((2,)): 1, V((0, 1)): 1}
    )
    s3 = hyper_catalan_series(3)
    assert s3.coefficient(V((3,))) == 1
    assert s3.coefficient(V((1, 1))) == 3
    assert s3.coefficient(V((0, 0, 1))) == 1
    assert len(s3) == 7


def test_counts_match_tree_enumeration():
    for m in enumerate_types(7):
        assert hyper_catalan(m) == len(enumerate_trees(m))


def test_series_support_is_every_type():
    # no coefficient vanishes, so the key set is the whole graded enumeration
    assert hyper_catalan_series(6).support() == enumerate_types(6)


def test_grade_sums_are_catalan():
    # setting every t_n to t turns S into the ordinary Catalan series,
    # because trees with w edges are partitioned by type
    bound = 9
    s = hyper_catalan_series(bound)
    sums = [0] * (bound + 1)
    for m, c in s.items():
        sums[m.edge_weight] += c
    assert sums == catalan_numbers(bound + 1)


def test_functional_equation_trivial_bound():
    report = verify_functional_equation(0)
    assert report.passed
    assert report.checked == 1


def test_functional_equation_weight_5():
    report = verify_functional_equation(5)
    assert report.passed
    assert not report.groups[0].mismatches
    assert report.checked == len(enumerate_types(5))


def test_functional_equation_every_bound_up_to_12():
    assert all(verify_functional_equation(w).passed for w in range(13))
