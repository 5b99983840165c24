"""Hyper-Catalan numbers and their generating series.

The hyper-Catalan number of an exponent vector m counts the ordered trees of
type m (equivalently, the subdigons with m_n faces of n + 1 edges):

    C(m) = (m_1 + 2 m_2 + 3 m_3 + ...)! / ((1 + m_2 + 2 m_3 + ...)! m_1! m_2! ...)

that is, edge_weight! / (leaf_count! * product of m_n!).  The division is
always exact.  Specializing m = (0, k) gives the classical Catalan numbers.

The generating series S = sum_m C(m) t^m is the unique formal power series
satisfying S = 1 + sum_{n >= 1} t_n S^n.
"""

from __future__ import annotations

import math
from functools import cache

from .reports import CheckGroup, Mismatch, VerificationReport
from .series import TruncatedSeries, TypeVector, enumerate_types, mismatches_between

# One shared factorial cache: table builds evaluate the formula over every
# monomial of a grade, re-hitting the same small arguments constantly.
_factorial = cache(math.factorial)


def hyper_catalan(m: TypeVector) -> int:
    """The exact hyper-Catalan number C(m); grows factorially with the weight."""
    denominator = _factorial(m.leaf_count)
    for e in m.entries:
        denominator *= _factorial(e)
    return _factorial(m.edge_weight) // denominator


def hyper_catalan_series(bound: int) -> TruncatedSeries:
    """S truncated at the given edge weight: coefficient of t^m is C(m)."""
    return TruncatedSeries(bound, {m: hyper_catalan(m) for m in enumerate_types(bound)})


def verify_functional_equation(bound: int) -> VerificationReport:
    """Check S = 1 + sum_{n>=1} t_n S^n coefficient-by-coefficient up to the bound.

    The right-hand side is recomposed with generic series arithmetic, so this
    pits the closed-form coefficients against truncated multiplication.  Any
    mismatched monomials are listed in the report; a correct implementation
    produces none.
    """
    closed_form = hyper_catalan_series(bound)
    rhs = TruncatedSeries.one(bound)
    power = TruncatedSeries.one(bound)
    for n in range(1, bound + 1):
        power = power * closed_form  # S^n after the n-th pass
        rhs = rhs + TruncatedSeries.variable(n, bound) * power
    mismatches = tuple(
        Mismatch(m.text, expected, actual)
        for m, expected, actual in mismatches_between(closed_form, rhs)
    )
    group = CheckGroup("monomials", len(enumerate_types(bound)), mismatches)
    return VerificationReport("functional-equation", bound, (group,))
