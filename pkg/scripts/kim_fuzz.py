#!/usr/bin/env python3
"""Fuzz the cost-versus-width reducibility bound on random sequences.

Draws random nonzero-entry sequences with zero sum and nonnegative
prefix sums, and checks that whenever the run cost is strictly below the
width a reducing sublist exists.  ``kim_theorem_check`` raises on any
violation, so a clean run prints statistics and exits 0.
"""

from __future__ import annotations

import argparse
import random
import sys
from collections import Counter

from kostka.sequences import CatalanSeq, kim_theorem_check


def random_sequence(rng: random.Random, width: int, max_entry: int) -> CatalanSeq:
    """Random walk that stays nonnegative and returns to zero at the end.

    Entries are nonzero; the final step closes whatever height is left,
    so the realised width is ``width`` or ``width + 1``.  Magnitudes are
    biased toward 1 and signs toward repeating, to produce long cheap
    runs — that is the regime where the cost bound actually bites.
    """
    entries: list[int] = []
    height = 0
    sign = 1
    for _ in range(width - 1):
        if height == 0:
            sign = 1
        elif rng.random() < 0.3:  # otherwise stay in the current run
            sign = -sign
        magnitude = 1 if rng.random() < 0.7 else rng.randint(1, max_entry)
        step = sign * min(magnitude, height) if sign < 0 else sign * magnitude
        entries.append(step)
        height += step
    if height:
        entries.append(-height)
    return CatalanSeq(tuple(entries))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--max-width", type=int, default=14)
    ap.add_argument("--max-entry", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    outcomes: Counter[str] = Counter()
    for _ in range(args.trials):
        width = rng.randint(2, args.max_width)
        seq = random_sequence(rng, width, args.max_entry)
        report = kim_theorem_check(seq, cap=args.max_width + 1)
        if not report.hypothesis:
            outcomes["cost >= width"] += 1
        elif report.witness is not None:
            outcomes["witness found"] += 1
        else:  # pragma: no cover - kim_theorem_check raises first
            outcomes["VIOLATION"] += 1
    for label, count in outcomes.most_common():
        print(f"{label:>14}: {count}")
    sys.exit(1 if outcomes["VIOLATION"] else 0)


if __name__ == "__main__":
    main()
