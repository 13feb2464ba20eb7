#!/usr/bin/env python3
"""Recompute the shipped Hilbert-basis catalogs.

Writes ``basis_r{1..N}.json`` into ``src/kostka/fixtures`` (or a chosen
directory).  Run this after touching the decomposition code, then eyeball
``git diff`` — the files are deterministic, so any churn is a behaviour
change.
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from kostka.cone import default_fixture_path, hilbert_basis


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=6)
    ap.add_argument(
        "--out-dir",
        type=Path,
        default=None,
        help="target directory (default: the installed package's fixtures/)",
    )
    args = ap.parse_args()

    for rank in range(1, args.max_rank + 1):
        t0 = time.perf_counter()
        catalog = hilbert_basis(rank, cap=args.max_rank)
        if args.out_dir is None:
            path = default_fixture_path(rank)
        else:
            path = args.out_dir / f"basis_r{rank}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        catalog.save(path)
        dt = time.perf_counter() - t0
        print(f"rank {rank}: {catalog.count:4d} elements  {dt:7.2f}s  -> {path}")


if __name__ == "__main__":
    main()
