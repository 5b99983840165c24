#!/usr/bin/env python3
"""Run the whole verification battery at desk scale and print a summary.

The algebraic identities (functional equation, factorization) are cheap and
run at the series bound; everything backed by exhaustive enumeration runs at
its own, smaller bound.  Exits nonzero if any check fails.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from geode import (
    verify_bijections,
    verify_factorization,
    verify_functional_equation,
    verify_marked_subdigons,
    verify_marked_trees,
)


@dataclass(frozen=True)
class DeskScale:
    series_bound: int = 12
    tree_bound: int = 10
    subdigon_bound: int = 8


def run(scale: DeskScale, verbose: bool) -> int:
    battery = [
        (verify_functional_equation, scale.series_bound),
        (verify_factorization, scale.series_bound),
        (verify_marked_trees, scale.tree_bound),
        (verify_marked_subdigons, scale.subdigon_bound),
        (verify_bijections, scale.subdigon_bound),
    ]
    failures = 0
    for check, bound in battery:
        start = time.perf_counter()
        report = check(bound)
        elapsed = time.perf_counter() - start
        verdict = "PASS" if report.passed else "FAIL"
        print(
            f"{report.name:<20} weight<={report.bound:<3} "
            f"{report.checked:>7} checked  {verdict}  ({elapsed:.2f}s)"
        )
        if verbose or not report.passed:
            for line in report.lines()[1:]:
                print(f"    {line.strip()}")
        failures += not report.passed
    return 1 if failures else 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--series-bound", type=int, default=DeskScale.series_bound)
    parser.add_argument("--tree-bound", type=int, default=DeskScale.tree_bound)
    parser.add_argument("--subdigon-bound", type=int, default=DeskScale.subdigon_bound)
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args()
    scale = DeskScale(args.series_bound, args.tree_bound, args.subdigon_bound)
    return run(scale, args.verbose)


if __name__ == "__main__":
    sys.exit(main())
