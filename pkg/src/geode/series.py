"""Exponent vectors and exact truncated power series in t_1, t_2, ...

Everything is graded by *edge weight*: the monomial
t^m = t_1^{m_1} t_2^{m_2} ... carries weight 1*m_1 + 2*m_2 + 3*m_3 + ...,
so the single variable t_n has weight n.  Under this grading every slice of
bounded weight holds finitely many monomials even though the variable supply
is infinite, which is what makes exact truncated arithmetic possible.

The weight of t^m equals the number of edges of an ordered tree of type m,
hence the name.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import zip_longest
from typing import Iterator, Mapping


@dataclass(frozen=True)
class TypeVector:
    """Exponent vector m = (m_1, m_2, ..., m_k), stored without trailing zeros.

    The same object serves as the *type* of an ordered tree (m_n = number of
    nodes with n children) and of a subdigon (m_n = number of faces with
    n + 1 edges).  The canonical text form is comma-separated entries with
    the empty string denoting the zero vector, e.g. "2,3,2,1".
    """

    entries: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in entries):
            raise ValueError(f"entries must be nonnegative integers, got {entries!r}")
        while entries and entries[-1] == 0:
            entries = entries[:-1]
        object.__setattr__(self, "entries", entries)

    @classmethod
    def zero(cls) -> TypeVector:
        return cls(())

    @classmethod
    def unit(cls, n: int) -> TypeVector:
        """The vector with a single 1 in position n (1-based)."""
        if n < 1:
            raise ValueError(f"variable index must be >= 1, got {n}")
        return cls((0,) * (n - 1) + (1,))

    @classmethod
    def parse(cls, text: str) -> TypeVector:
        """Inverse of ``text``; accepts non-canonical input like "0,1,0"."""
        stripped = text.strip()
        if not stripped:
            return cls.zero()
        try:
            entries = tuple(int(part) for part in stripped.split(","))
        except ValueError:
            raise ValueError(f"not a comma-separated integer vector: {text!r}") from None
        return cls(entries)

    @property
    def text(self) -> str:
        return ",".join(str(e) for e in self.entries)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"TypeVector({self.text!r})"

    def multiplicity(self, n: int) -> int:
        """m_n, the exponent of t_n (1-based; zero beyond the stored length)."""
        if n < 1:
            raise ValueError(f"variable index must be >= 1, got {n}")
        return self.entries[n - 1] if n <= len(self.entries) else 0

    def __bool__(self) -> bool:
        return bool(self.entries)

    @cached_property
    def edge_weight(self) -> int:
        """Sum of n * m_n; the number of edges of a tree of this type."""
        return sum((i + 1) * e for i, e in enumerate(self.entries))

    @property
    def leaf_count(self) -> int:
        """1 + sum of (n - 1) * m_n; the number of leaves of a tree of this type."""
        return 1 + sum(i * e for i, e in enumerate(self.entries))

    @property
    def node_count(self) -> int:
        return 1 + self.edge_weight

    def __add__(self, other: TypeVector) -> TypeVector:
        return TypeVector(
            tuple(a + b for a, b in zip_longest(self.entries, other.entries, fillvalue=0))
        )

    def __sub__(self, other: TypeVector) -> TypeVector:
        diff = tuple(a - b for a, b in zip_longest(self.entries, other.entries, fillvalue=0))
        if any(d < 0 for d in diff):
            raise ValueError(f"{self!r} - {other!r} has a negative entry")
        return TypeVector(diff)


def grading_key(m: TypeVector) -> tuple[int, tuple[int, ...]]:
    """Sort key for the graded order used everywhere in this package.

    Vectors sort by edge weight; within one grade the tie-break is descending
    lexicographic on the entries, so t_1^2 precedes t_2 and t_1 t_2 precedes
    t_3.
    """
    return (m.edge_weight, tuple(-e for e in m.entries))


def enumerate_types(bound: int) -> list[TypeVector]:
    """All vectors with edge weight <= bound, each once, in graded order.

    The grade of weight w is in bijection with the integer partitions of w
    (m_n = multiplicity of the part n), so the list grows by p(w) entries per
    grade.
    """
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    out: list[TypeVector] = []
    for weight in range(bound + 1):
        grade = [TypeVector(v) for v in _multiplicity_vectors(weight)]
        grade.sort(key=grading_key)
        out.extend(grade)
    return out


def _multiplicity_vectors(weight: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``weight`` encoded as part-multiplicity tuples."""
    if weight == 0:
        yield ()
        return

    def rec(remaining: int, max_part: int, parts: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            largest = parts[0]
            yield tuple(parts.count(n) for n in range(1, largest + 1))
            return
        for part in range(min(remaining, max_part), 0, -1):
            parts.append(part)
            yield from rec(remaining - part, part, parts)
            parts.pop()

    yield from rec(weight, weight, [])


class TruncatedSeries:
    """Formal power series with integer coefficients, truncated at a fixed weight.

    Monomials of weight above the bound are discarded by every operation and
    absent monomials have coefficient zero, so the representation is a finite
    sparse map.  Coefficients are plain Python ints and therefore exact at
    any size.  Instances are immutable; all operations return new series.

    >>> t1 = TruncatedSeries.variable(1, bound=2)
    >>> print((TruncatedSeries.one(2) + t1) * (TruncatedSeries.one(2) + t1))
    1 + 2*t1 + t1^2
    """

    __slots__ = ("bound", "_coeffs")

    def __init__(self, bound: int, coeffs: Mapping[TypeVector, int] | None = None):
        if bound < 0:
            raise ValueError(f"bound must be nonnegative, got {bound}")
        data: dict[TypeVector, int] = {}
        if coeffs:
            for monomial, value in coeffs.items():
                if value != 0 and monomial.edge_weight <= bound:
                    data[monomial] = value
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "_coeffs", data)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, bound: int) -> TruncatedSeries:
        return cls(bound)

    @classmethod
    def one(cls, bound: int) -> TruncatedSeries:
        return cls(bound, {TypeVector.zero(): 1})

    @classmethod
    def variable(cls, n: int, bound: int) -> TruncatedSeries:
        """The series t_n (which is zero if n exceeds the bound)."""
        return cls(bound, {TypeVector.unit(n): 1})

    def coefficient(self, monomial: TypeVector) -> int:
        return self._coeffs.get(monomial, 0)

    def items(self) -> list[tuple[TypeVector, int]]:
        """Nonzero (monomial, coefficient) pairs in graded order."""
        return sorted(self._coeffs.items(), key=lambda kv: grading_key(kv[0]))

    def support(self) -> list[TypeVector]:
        return [m for m, _ in self.items()]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.bound == other.bound and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.bound, frozenset(self._coeffs.items())))

    def _check_bound(self, other: TruncatedSeries) -> None:
        if self.bound != other.bound:
            raise ValueError(f"bound mismatch: {self.bound} vs {other.bound}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_bound(other)
        total = dict(self._coeffs)
        for monomial, value in other._coeffs.items():
            total[monomial] = total.get(monomial, 0) + value
        return TruncatedSeries(self.bound, total)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_bound(other)
        total = dict(self._coeffs)
        for monomial, value in other._coeffs.items():
            total[monomial] = total.get(monomial, 0) - value
        return TruncatedSeries(self.bound, total)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_bound(other)
        bound = self.bound
        product: dict[TypeVector, int] = {}
        for ma, ca in self._coeffs.items():
            wa = ma.edge_weight
            for mb, cb in other._coeffs.items():
                if wa + mb.edge_weight > bound:
                    continue
                key = ma + mb
                product[key] = product.get(key, 0) + ca * cb
        return TruncatedSeries(bound, product)

    def power(self, exponent: int) -> TruncatedSeries:
        if exponent < 1:
            raise ValueError(f"exponent must be a positive integer, got {exponent}")
        result = self
        for _ in range(exponent - 1):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(_format_term(m, c) for m, c in self.items())

    def __repr__(self) -> str:
        return f"<TruncatedSeries bound={self.bound}: {self}>"


def sum_of_variables(bound: int) -> TruncatedSeries:
    """t_1 + t_2 + ... + t_bound, the cofactor of the Geode in S - 1."""
    return TruncatedSeries(
        bound, {TypeVector.unit(n): 1 for n in range(1, bound + 1)}
    )


def mismatches_between(
    a: TruncatedSeries, b: TruncatedSeries
) -> list[tuple[TypeVector, int, int]]:
    """Monomials where the two series disagree, as (monomial, a-value, b-value)."""
    a._check_bound(b)
    monomials = set(a.support()) | set(b.support())
    out = []
    for m in sorted(monomials, key=grading_key):
        ca, cb = a.coefficient(m), b.coefficient(m)
        if ca != cb:
            out.append((m, ca, cb))
    return out


def _format_term(monomial: TypeVector, value: int) -> str:
    if not monomial:
        return str(value)
    factors = []
    for i, e in enumerate(monomial.entries):
        if e == 1:
            factors.append(f"t{i + 1}")
        elif e > 1:
            factors.append(f"t{i + 1}^{e}")
    body = "*".join(factors)
    return body if value == 1 else f"{value}*{body}"
