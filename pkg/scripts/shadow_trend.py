#!/usr/bin/env python3
"""Tabulate how the shadow ratio of the widest canonical family approaches
the large-family bound as the ground set grows.

Usage: python scripts/shadow_trend.py [--k K] [--t T] [--j J] [--n N ...]

All values are exact rationals; the gap column must shrink monotonically.
"""
import argparse
from fractions import Fraction

from shadowlab.bounds import thm14_bound
from shadowlab.canonical import frankl_family
from shadowlab.shadow import shadow_j, shadow_ratio


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=4)
    parser.add_argument("--t", type=int, default=2)
    parser.add_argument("--j", type=int, default=1)
    parser.add_argument("--n", type=int, nargs="*", default=[8, 12, 16, 24, 32])
    args = parser.parse_args()

    bound = thm14_bound(args.k, args.t, args.j)
    h = args.k - args.t - 1
    print(f"widest canonical family A_h, h={h}; bound {bound} = {float(bound):.6f}")
    print(f"{'n':>4} {'|F|':>8} {'|shadow|':>9} {'ratio':>12} {'gap':>12}")
    prev = None
    for n in args.n:
        fam = frankl_family(n, args.k, args.t, h)
        ratio = shadow_ratio(fam, args.j)
        gap = ratio - bound
        marker = ""
        if prev is not None:
            marker = "ok" if gap < prev else "NOT SHRINKING"
        print(f"{n:>4} {len(fam):>8} {len(shadow_j(fam, args.j)):>9} "
              f"{str(ratio):>12} {str(gap):>12} {marker}")
        prev = gap


if __name__ == "__main__":
    main()
