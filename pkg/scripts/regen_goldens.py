#!/usr/bin/env python3
"""Regenerate the golden minimum-shadow tables under tests/goldens/v1/.

Regeneration must be bit-identical to the checked-in files; run the test
suite afterwards to confirm (`pytest tests/test_verify.py -k golden`).
"""
from pathlib import Path

from shadowlab.verify import min_shadow_table, min_shadow_table_csv

POINTS = [(4, 2, 1, 1), (5, 2, 1, 1), (6, 3, 2, 1)]

if __name__ == "__main__":
    out_dir = Path(__file__).resolve().parent.parent / "tests" / "goldens" / "v1"
    out_dir.mkdir(parents=True, exist_ok=True)
    for n, k, t, j in POINTS:
        path = out_dir / f"minshadow_n{n}_k{k}_t{t}_j{j}.csv"
        path.write_text(min_shadow_table_csv(min_shadow_table(n, k, t, j)))
        print(f"wrote {path}")
