"""Littlewood-Richardson coefficients and the wide counterexample family.

c(lambda, mu; nu) counts skew semistandard tableaux of shape nu/lambda
and content mu whose reading word (right to left, top to bottom) is a
ballot sequence.  The counter below fills cells in reading order, so
the ballot and content conditions prune as it goes; it is exact and
meant for small shapes (|nu| capped).

The family :func:`counterexample_family` produces, for each k >= 2, a
primitive triple at rank r = 3k-1 with nu_1 = k(k-1) growing
quadratically in r, showing that no analogue of the width bound (first
part bounded by rank) can hold for the triple semigroup: from k = 4 on,
nu_1 > r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import config
from .errors import AssertionFailure, InvalidTriple, ShapeError, SizeCapExceeded
from .partitions import Partition, as_partition, pad, size


@dataclass(frozen=True)
class LrTriple:
    lam: Partition
    mu: Partition
    nu: Partition
    rank: int

    def __post_init__(self) -> None:
        lam = as_partition(self.lam)
        mu = as_partition(self.mu)
        nu = as_partition(self.nu)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)
        if self.rank < 0 or max(len(lam), len(mu), len(nu)) > self.rank:
            raise InvalidTriple(
                f"lengths {len(lam)}, {len(mu)}, {len(nu)} exceed rank {self.rank}"
            )


def lr_coefficient(triple: LrTriple, cap: int = config.LR_BOX_CAP) -> int:
    """The coefficient c(lambda, mu; nu), counted tableau by tableau.

    Raises :class:`ShapeError` when lambda is not contained in nu and
    :class:`SizeCapExceeded` when |nu| > ``cap``; returns 0 when the
    sizes cannot match.
    """
    lam, mu, nu = triple.lam, triple.mu, triple.nu
    if size(nu) > cap:
        raise SizeCapExceeded(f"|nu| = {size(nu)} exceeds cap {cap}")
    lam_padded = pad(lam, len(nu)) if len(lam) <= len(nu) else None
    if lam_padded is None or any(l > n for l, n in zip(lam_padded, nu)):
        raise ShapeError(f"lambda {lam} is not contained in nu {nu}")
    if size(lam) + size(mu) != size(nu):
        return 0
    values = len(mu)
    # skew cells in reading order: top row first, right to left
    cells: list[tuple[int, int]] = []
    for i, outer in enumerate(nu):
        for j in range(outer - 1, lam_padded[i] - 1, -1):
            cells.append((i, j))
    if not cells:
        return 1  # empty skew shape, empty content
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (values + 1)

    def above_value(i: int, j: int) -> int | None:
        if i == 0 or j >= nu[i - 1] or j < lam_padded[i - 1]:
            return None
        return grid[(i - 1, j)]

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        right = grid.get((i, j + 1))
        floor = above_value(i, j)
        total = 0
        for v in range(1, values + 1):
            if right is not None and v > right:
                break  # rows weakly increase left to right
            if floor is not None and v <= floor:
                continue  # columns strictly increase top to bottom
            if counts[v] >= mu[v - 1]:
                continue  # content bound
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # ballot: prefix counts stay weakly decreasing
            grid[(i, j)] = v
            counts[v] += 1
            total += fill(idx + 1)
            counts[v] -= 1
            del grid[(i, j)]
        return total

    return fill(0)


def counterexample_family(k: int) -> LrTriple:
    """The rank-(3k-1) triple with lambda = (k^(k-1), (k-1)^k),
    mu = three copies each of j(k-1) for j = k-1..1, and
    nu = ((k(k-1))^2, mu)."""
    if k < 2:
        raise ValueError(f"family needs k >= 2, got {k}")
    rank = 3 * k - 1
    lam = (k,) * (k - 1) + (k - 1,) * k
    mu = tuple(j * (k - 1) for j in range(k - 1, 0, -1) for _ in range(3))
    nu = (k * (k - 1),) * 2 + mu
    triple = LrTriple(
        lam=as_partition(lam), mu=as_partition(mu), nu=as_partition(nu), rank=rank
    )
    if size(triple.lam) != 2 * k * (k - 1):
        raise AssertionFailure(f"|lambda| wrong for k={k}")
    if 2 * size(triple.mu) != 3 * k * (k - 1) ** 2:
        raise AssertionFailure(f"|mu| wrong for k={k}")
    if size(triple.lam) + size(triple.mu) != size(triple.nu):
        raise AssertionFailure(f"size identity fails for k={k}")
    if len(triple.nu) != rank:
        raise AssertionFailure(f"nu should have exactly rank parts for k={k}")
    if math.gcd(*triple.lam, *triple.mu, *triple.nu) != 1:
        raise AssertionFailure(f"family triple not primitive for k={k}")
    return triple


@dataclass(frozen=True)
class GrowthRow:
    k: int
    rank: int
    nu1: int
    exceeds_rank: bool


def growth_table(k_max: int) -> tuple[GrowthRow, ...]:
    """nu_1 = ((r+1)/3)((r+1)/3 - 1) versus r, for k = 2..k_max."""
    rows = []
    for k in range(2, k_max + 1):
        rank = 3 * k - 1
        nu1 = k * (k - 1)
        if nu1 != ((rank + 1) // 3) * ((rank + 1) // 3 - 1):
            raise AssertionFailure(f"nu_1 closed form fails at k={k}")
        if (nu1 > rank) != (k >= 4):
            raise AssertionFailure(f"nu_1 > rank should first happen at k=4; k={k}")
        rows.append(GrowthRow(k=k, rank=rank, nu1=nu1, exceeds_rank=nu1 > rank))
    return tuple(rows)


@dataclass(frozen=True)
class CounterexampleReport:
    k: int
    rank: int
    triple: LrTriple
    nu1: int
    exceeds_rank: bool
    coefficient: int | None  # None when |nu| is beyond the counting cap


def verify_counterexample(k: int, cap: int = config.LR_BOX_CAP) -> CounterexampleReport:
    """Build the family triple, re-check its identities, and (within the
    counting cap) confirm the coefficient is positive."""
    triple = counterexample_family(k)
    nu1 = triple.nu[0]
    growth_table(max(k, 2))  # identity checks up through this k
    coefficient: int | None = None
    if size(triple.nu) <= cap:
        coefficient = lr_coefficient(triple, cap)
        if coefficient < 1:
            raise AssertionFailure(f"family coefficient vanished for k={k}")
    return CounterexampleReport(
        k=k,
        rank=triple.rank,
        triple=triple,
        nu1=nu1,
        exceeds_rank=nu1 > triple.rank,
        coefficient=coefficient,
    )
