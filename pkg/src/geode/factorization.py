"""The Geode: the series G with S = 1 + (t_1 + t_2 + ...) G.

Comparing the coefficient of t^(k + e_1) on both sides of the factorization
gives, for every k,

    C(k + e_1) = sum over n with (k + e_1)_n >= 1 of G(k + e_1 - e_n).

The n = 1 term on the right is G(k) itself and every other term has edge
weight at most weight(k) - 1, so solving for G(k) yields a recurrence that
is well founded under the edge-weight grading:

    G(k) = C(k + e_1) - sum over n >= 2 with k_n >= 1 of G(k + e_1 - e_n).

Only the monomials containing t_1 are consumed by the recurrence.  The
factorization also constrains every t_1-free monomial, and those equations
are genuinely overdetermined: verify_factorization checks them separately.

The coefficients of G count marked trees (and marked subdigons); the
verify_marked_* routines check this against exhaustive enumeration.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .hypercatalan import hyper_catalan, hyper_catalan_series
from .reports import CheckGroup, Mismatch, VerificationReport
from .series import (
    TruncatedSeries,
    TypeVector,
    enumerate_types,
    mismatches_between,
    sum_of_variables,
)
from .subdigons import count_marked_subdigons
from .trees import count_marked_trees


class NegativeGeodeCoefficientError(ArithmeticError):
    """Raised if the factorization recurrence produces a negative value.

    Every Geode coefficient counts marked trees, so a negative intermediate
    can only mean corrupted target values or an implementation bug; it is a
    hard failure rather than a reportable mismatch.
    """


def geode_series(bound: int) -> TruncatedSeries:
    """G truncated at the given edge weight, solved from the factorization."""
    order = enumerate_types(bound)
    e1 = TypeVector.unit(1)
    targets = {k: hyper_catalan(k + e1) for k in order}
    return solve_factorization(bound, targets, order)


def solve_factorization(
    bound: int,
    targets: Mapping[TypeVector, int],
    order: Iterable[TypeVector],
) -> TruncatedSeries:
    """Run the recurrence with explicit targets C(k + e_1) and processing order.

    Any order that never visits a vector before all vectors of strictly
    smaller edge weight is valid; the solution cannot depend on the choice.
    Exposed separately so that reorderings and corrupted targets can be
    exercised directly.
    """
    e1 = TypeVector.unit(1)
    coeffs: dict[TypeVector, int] = {}
    for k in order:
        value = targets[k]
        lifted = k + e1
        for n in range(2, len(lifted.entries) + 1):
            if lifted.multiplicity(n):
                value -= coeffs[lifted - TypeVector.unit(n)]
        if value < 0:
            raise NegativeGeodeCoefficientError(
                f"coefficient of t^[{k.text}] came out {value}"
            )
        coeffs[k] = value
    return TruncatedSeries(bound, coeffs)


def verify_factorization(bound: int) -> VerificationReport:
    """Check S = 1 + (t_1 + ... + t_bound) G at every monomial up to the bound.

    The recurrence only ever used the monomials containing t_1, so the
    t_1-free monomials are reported as their own group of consistency
    equations; the constant term is listed separately as well.
    """
    s = hyper_catalan_series(bound)
    recomposed = TruncatedSeries.one(bound) + sum_of_variables(bound) * geode_series(bound)
    defining: list[Mismatch] = []
    consistency: list[Mismatch] = []
    for m, expected, actual in mismatches_between(s, recomposed):
        bucket = defining if m.multiplicity(1) else consistency
        bucket.append(Mismatch(m.text, expected, actual))
    types = enumerate_types(bound)
    n_defining = sum(1 for m in types if m.multiplicity(1))
    n_consistency = sum(1 for m in types if m and not m.multiplicity(1))
    groups = (
        CheckGroup("constant term", 1),
        CheckGroup("defining equations (t_1 present)", n_defining, tuple(defining)),
        CheckGroup(
            "consistency equations (t_1 absent)", n_consistency, tuple(consistency)
        ),
    )
    return VerificationReport("factorization", bound, groups)


def verify_marked_trees(bound: int) -> VerificationReport:
    """Compare every Geode coefficient with the exhaustive marked-tree count.

    The two sides share nothing beyond the series plumbing: the left comes
    from the algebraic recurrence, the right from enumerating trees and
    counting initial leaves.  Exponential in the bound.
    """
    g = geode_series(bound)
    mismatches = []
    types = enumerate_types(bound)
    for m in types:
        expected = g.coefficient(m)
        actual = count_marked_trees(m)
        if expected != actual:
            mismatches.append(Mismatch(m.text, expected, actual))
    group = CheckGroup("coefficients vs marked-tree counts", len(types), tuple(mismatches))
    return VerificationReport("marked-trees", bound, (group,))


def verify_marked_subdigons(bound: int) -> VerificationReport:
    """Compare every Geode coefficient with the marked-subdigon count.

    Marks count external edges up to the completion of the first external
    face, the polygon-side mirror of initial leaves.  Exponential in the
    bound.
    """
    g = geode_series(bound)
    mismatches = []
    types = enumerate_types(bound)
    for m in types:
        expected = g.coefficient(m)
        actual = count_marked_subdigons(m)
        if expected != actual:
            mismatches.append(Mismatch(m.text, expected, actual))
    group = CheckGroup(
        "coefficients vs marked-subdigon counts", len(types), tuple(mismatches)
    )
    return VerificationReport("marked-subdigons", bound, (group,))
