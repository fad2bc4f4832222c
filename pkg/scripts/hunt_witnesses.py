#!/usr/bin/env python3
"""Scan the union construction for parameter points where a family larger
than the base layer still beats the large-family shadow bound downward.

Usage: python scripts/hunt_witnesses.py [--k-max K] [--t T] [--j J]

For each k the scan tries every admissible s and a window of n just above
the point where the family first exceeds the base layer.  Exact arithmetic
throughout; witnesses are reported with their exact ratios.
"""
import argparse

from shadowlab.core import binomial
from shadowlab.verify import scan_example15


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k-max", type=int, default=12)
    parser.add_argument("--t", type=int, default=3)
    parser.add_argument("--j", type=int, default=1)
    args = parser.parse_args()

    t, j = args.t, args.j
    for k in range(t + 2, args.k_max + 1):
        s_values = range(0, k - t - 1)
        base = 2 * k - t
        n_values = range(base + 1, base + 3 * k)
        report = scan_example15(k, t, j, s_values, n_values)
        layer = binomial(base, k)
        if report.witnesses:
            w = report.witnesses[0]
            print(f"k={k}: WITNESS at (s={w.s}, n={w.n}): size {w.family_size} > {layer}, "
                  f"ratio {w.ratio} < bound {w.bound}")
        else:
            print(f"k={k}: no witness in the scanned window")


if __name__ == "__main__":
    main()
