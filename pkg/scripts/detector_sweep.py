#!/usr/bin/env python3
"""Sweep small cone pairs and compare the two reducibility detectors.

For every pair (lambda, mu) with mu dominated by lambda, first part and
box count bounded by the flags, run

  * the graph-based fast detector (conservative subtree -> column split),
  * the exhaustive column-subset test on the canonical matrix,

and count agreements.  The fast detector claims completeness on this
range, so any discrepancy is printed loudly and the exit code is 1.
"""

from __future__ import annotations

import argparse
import sys
import time

from kostka.kgr import fast_reducibility
from kostka.partitions import KostkaPair, dominated_partitions, enumerate_partitions
from kostka.ryser import matrix_reducible, ryser_canonical


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-width", type=int, default=7, help="largest first part")
    ap.add_argument("--max-boxes", type=int, default=13)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()

    t0 = time.perf_counter()
    pairs = reducible = bad = 0
    for n in range(1, args.max_boxes + 1):
        for lam in enumerate_partitions(n, max_part=args.max_width):
            for mu in dominated_partitions(lam, max_len=n):
                pair = KostkaPair(lam, mu, rank=max(len(lam), len(mu)))
                pairs += 1
                fast = fast_reducibility(pair)
                slow = matrix_reducible(ryser_canonical(pair))
                if (fast is None) != (slow is None):
                    bad += 1
                    print(f"MISMATCH {pair}: fast={fast} exhaustive={slow}")
                if slow is not None:
                    reducible += 1
                    if args.verbose and fast is not None:
                        print(f"{pair}: columns {fast.columns}")
    dt = time.perf_counter() - t0
    print(
        f"{pairs} pairs, {reducible} reducible, {bad} mismatches "
        f"({dt:.1f}s, width<={args.max_width}, boxes<={args.max_boxes})"
    )
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
