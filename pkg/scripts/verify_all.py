#!/usr/bin/env python3
"""Run every invariant suite across the standard desk-scale type list
and print a pass/fail matrix.  Exits nonzero if anything fails."""

import argparse
import sys
import time

from heckekit import HeckeAlgebra, build_named, run_suites
from heckekit.verify import SUITES

DEFAULT_TYPES = ["A1", "A1xA1", "A2", "A3", "B2", "B3",
                 "I2(5)", "I2(6)", "I2(7)", "I2(8)"]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--types", default=",".join(DEFAULT_TYPES),
                        help="comma-separated type names")
    parser.add_argument("--words", type=int, default=25,
                        help="random words per subset for bs-positivity")
    args = parser.parse_args()

    names = [t.strip() for t in args.types.split(",") if t.strip()]
    width = max(6, max(len(n) for n in names) + 2)
    print("type".ljust(width) + "  ".join(s.ljust(14) for s in SUITES) + "time")
    failures = 0
    for name in names:
        t0 = time.perf_counter()
        algebra = HeckeAlgebra(build_named(name))
        results = run_suites(algebra, bs_words=args.words)
        elapsed = time.perf_counter() - t0
        cells = []
        for r in results:
            cells.append(("pass" if r.passed else "FAIL").ljust(14))
            if not r.passed:
                failures += 1
        print(name.ljust(width) + "  ".join(cells) + f"{elapsed:.1f}s")
        for r in results:
            if not r.passed:
                print(f"    {r.name}: {r.first_failure}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
