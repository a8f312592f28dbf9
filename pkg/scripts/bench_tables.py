#!/usr/bin/env python3
"""Timing experiment: KL table, parabolic tables and inverse tables for a
chosen type (default A4), every finitary subset, single worker."""

import argparse
import itertools
import time

from heckekit import HeckeAlgebra, build_named


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--type", default="A4")
    args = parser.parse_args()

    t0 = time.perf_counter()
    system = build_named(args.type)
    print(f"{args.type}: {system.size} elements, built in "
          f"{time.perf_counter() - t0:.3f}s")

    algebra = HeckeAlgebra(system)
    t0 = time.perf_counter()
    for x in range(system.size):
        algebra.kl_basis(x)
    print(f"full KL table: {time.perf_counter() - t0:.3f}s")

    total = 0.0
    for size in range(system.rank + 1):
        for subset in itertools.combinations(range(system.rank), size):
            t0 = time.perf_counter()
            module = algebra.parabolic(subset)
            for x in module.reps:
                module.kl_basis(x)
            for x in module.reps:
                for z in module.reps:
                    module.inverse_kl(x, z)
            dt = time.perf_counter() - t0
            total += dt
            labels = ",".join(system.gen_label(s) for s in subset) or "{}"
            print(f"  I = {labels:<12} |W^I| = {len(module.reps):>4}  {dt:.3f}s")
    print(f"all parabolic + inverse tables: {total:.3f}s")


if __name__ == "__main__":
    main()
