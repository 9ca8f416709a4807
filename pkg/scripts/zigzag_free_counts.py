#!/usr/bin/env python3
"""Emit the zigzag-free counting sequences for inspection.

For each size n up to --max-n, prints for every degree k the number of
permutations containing no k-zigzag and the number containing no
uninterrupted k-zigzag.  These bracket the k-pass-sortable counts, which
are printed alongside.  No closed form is asserted; the sequences are
produced for study.

Runtime grows steeply: n = 8 takes a few seconds, n = 9 about a minute,
n = 10 tens of minutes on one core.
"""
import argparse
import sys

sys.path.insert(0, "src")

from revstack.enumeration import descent_table, zigzag_free_table


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--jobs", type=int, default=None)
    args = parser.parse_args()

    for n in range(1, args.max_n + 1):
        rows = zigzag_free_table(n)
        table = descent_table(n, "revstack", jobs=args.jobs)
        print(f"n = {n}")
        print("  k  no-k-zigzag  k-pass-sortable  no-uninterrupted-k-zigzag")
        for k in range(n):
            lo, hi = rows[k]
            mid = table.count(k)
            assert lo <= mid <= hi
            print(f"  {k}  {lo:>11}  {mid:>15}  {hi:>25}")
        free_series = [rows[k][0] for k in range(n + 1)]
        free_u_series = [rows[k][1] for k in range(n + 1)]
        print(f"  no-zigzag series by k:              {free_series}")
        print(f"  no-uninterrupted-zigzag series by k: {free_u_series}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
