"""Subset sum reduced to pair irreducibility.

An instance (a_1, ..., a_d; b) with positive values, b <= A = sum(a),
maps to the pair

    lambda = conjugate(A+1, a_1, ..., a_d),   mu = conjugate(2A-b+1, b)

at rank 2A - b + 1.  The pair is always in the cone, and it decomposes
exactly when some subset of the values sums to b: a witnessing subset S
yields the summand (conjugate of {a_i : i in S}, (1^b)), with the
complement absorbing the tall first column.  The ambient dimension is
linear in A, so the map is a polynomial reduction.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import config
from .errors import AssertionFailure, InvalidInstance, SizeCapExceeded
from .partitions import KostkaPair, as_partition, conjugate, pad, size
from .cone import decompose


@dataclass(frozen=True)
class SubsetSumInstance:
    """Positive values and a positive target no larger than their sum
    (larger targets are trivially 'no' and rejected up front)."""

    values: tuple[int, ...]
    target: int

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise InvalidInstance("need at least one value")
        if any(v <= 0 for v in values):
            raise InvalidInstance(f"values must be positive: {values}")
        if self.target <= 0:
            raise InvalidInstance(f"target must be positive: {self.target}")
        if self.target > sum(values):
            raise InvalidInstance(
                f"target {self.target} exceeds the total {sum(values)}"
            )

    @property
    def total(self) -> int:
        return sum(self.values)

    def sorted_desc(self) -> "SubsetSumInstance":
        return SubsetSumInstance(
            values=tuple(sorted(self.values, reverse=True)), target=self.target
        )


def subset_sum_oracle(
    inst: SubsetSumInstance, cap: int = config.SUBSET_CAP
) -> tuple[int, ...] | None:
    """First (in sorted-index-tuple order) subset of positions summing to
    the target, or None.  Depth-first with include-before-skip, so the
    first hit is the lexicographically smallest witness."""
    d = len(inst.values)
    if d > cap:
        raise SizeCapExceeded(f"{d} values exceed cap {cap}")
    values, target = inst.values, inst.target
    suffix = [0] * (d + 1)
    for i in range(d - 1, -1, -1):
        suffix[i] = suffix[i + 1] + values[i]

    def dfs(i: int, remaining: int, acc: list[int]) -> tuple[int, ...] | None:
        if remaining == 0:
            return tuple(acc)
        if i == d or remaining < 0 or suffix[i] < remaining:
            return None
        acc.append(i + 1)
        hit = dfs(i + 1, remaining - values[i], acc)
        if hit is not None:
            return hit
        acc.pop()
        return dfs(i + 1, remaining, acc)

    return dfs(0, target, [])


def reduce_to_kostka(inst: SubsetSumInstance) -> KostkaPair:
    """The reduction pair; values are sorted decreasingly first, and the
    resulting pair always lies in the cone."""
    values = tuple(sorted(inst.values, reverse=True))
    total, target = sum(values), inst.target
    lam = conjugate(as_partition((total + 1,) + values))
    mu = conjugate(as_partition((2 * total - target + 1, target)))
    return KostkaPair(lam, mu, rank=2 * total - target + 1)


def proof_decomposition(
    inst: SubsetSumInstance, subset: tuple[int, ...]
) -> tuple[KostkaPair, KostkaPair]:
    """The explicit decomposition induced by a yes-witness ``subset``
    (1-based positions into the decreasingly sorted values): the subset
    columns with mu-part (1^target), and everything else with mu-part
    (1^rank)."""
    values = tuple(sorted(inst.values, reverse=True))
    total, target = sum(values), inst.target
    rank = 2 * total - target + 1
    chosen = [values[i - 1] for i in subset]
    if sum(chosen) != target:
        raise AssertionFailure(f"subset {subset} sums to {sum(chosen)}, not {target}")
    rest = list(values)
    for v in chosen:
        rest.remove(v)
    selected = KostkaPair(
        conjugate(as_partition(sorted(chosen, reverse=True))),
        as_partition((1,) * target),
        rank,
    )
    complement = KostkaPair(
        conjugate(as_partition(sorted([total + 1] + rest, reverse=True))),
        as_partition((1,) * rank),
        rank,
    )
    whole = reduce_to_kostka(inst)
    for side in ("lam", "mu"):
        added = tuple(
            a + b
            for a, b in zip(
                pad(getattr(selected, side), rank), pad(getattr(complement, side), rank)
            )
        )
        if added != pad(getattr(whole, side), rank):
            raise AssertionFailure(f"proof decomposition does not add back on {side}")
    return selected, complement


@dataclass(frozen=True)
class EquivalenceReport:
    instance: SubsetSumInstance
    pair: KostkaPair
    subset: tuple[int, ...] | None
    decomposition: tuple[KostkaPair, KostkaPair] | None
    coordinates: int


def reduction_equivalence_check(
    inst: SubsetSumInstance, cap: int = config.SPLIT_CAP
) -> EquivalenceReport:
    """Run both sides and insist they agree: the brute-force subset
    oracle on one hand, pair irreducibility of the reduction on the
    other.  Disagreement raises :class:`AssertionFailure`."""
    canonical = inst.sorted_desc()
    pair = reduce_to_kostka(canonical)
    witness = subset_sum_oracle(canonical)
    found = decompose(pair, cap)
    if (witness is None) != (found is None):
        raise AssertionFailure(
            f"oracle says {witness}, decomposition search says {found} for {inst}"
        )
    decomposition = proof_decomposition(canonical, witness) if witness else None
    if size(pair.lam) != 2 * canonical.total + 1:
        raise AssertionFailure("reduction pair has the wrong box count")
    return EquivalenceReport(
        instance=canonical,
        pair=pair,
        subset=witness,
        decomposition=decomposition,
        coordinates=2 * pair.rank,
    )
