from __future__ import annotations

from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kostka.partitions import (
    KostkaPair,
    Partition,
    dominated_partitions,
    enumerate_partitions,
)

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("suite")

FIXTURES = Path(__file__).parent / "fixtures"


def read_matrix_blocks(name: str) -> list[tuple[tuple[int, ...], ...]]:
    """Blank-line separated integer matrices from tests/fixtures."""
    text = (FIXTURES / name).read_text()
    blocks = []
    for chunk in text.split("\n\n"):
        if not chunk.strip():
            continue
        blocks.append(
            tuple(
                tuple(int(tok) for tok in line.split())
                for line in chunk.strip().splitlines()
            )
        )
    return blocks


@lru_cache(maxsize=None)
def partition_pool(
    max_boxes: int, max_part: int = 0, max_len: int = 0
) -> tuple[Partition, ...]:
    """Every partition of 0..max_boxes under the given bounds."""
    pool: list[Partition] = []
    for n in range(max_boxes + 1):
        pool.extend(
            enumerate_partitions(n, max_part=max_part or None, max_len=max_len or None)
        )
    return tuple(pool)


@lru_cache(maxsize=None)
def cone_pair_pool(max_boxes: int, max_width: int = 0) -> tuple[KostkaPair, ...]:
    """Every nonzero dominance pair with at most max_boxes boxes."""
    pairs: list[KostkaPair] = []
    for n in range(1, max_boxes + 1):
        for lam in enumerate_partitions(n, max_part=max_width or None):
            for mu in dominated_partitions(lam, max_len=n):
                pairs.append(KostkaPair(lam, mu))
    return tuple(pairs)


def partitions_st(max_boxes: int = 12, max_part: int = 0, max_len: int = 0):
    return st.sampled_from(partition_pool(max_boxes, max_part, max_len))


def cone_pairs_st(max_boxes: int = 12, max_width: int = 0):
    return st.sampled_from(cone_pair_pool(max_boxes, max_width))


@pytest.fixture(scope="session")
def running_pair() -> KostkaPair:
    """The worked 34-box example used throughout the golden tests."""
    return KostkaPair((8, 7, 7, 7, 3, 2), (7, 7, 4, 4, 4, 4, 4))
