"""Integer partitions, dominance order, and Kostka numbers.

A partition is a trimmed, weakly decreasing tuple of positive integers;
the empty tuple is the zero partition.  All functions accept any
integer sequence and normalize through :func:`as_partition`.

The central object is :class:`KostkaPair`: a pair (lambda, mu) of equal
size with mu dominated by lambda, carried together with an explicit
ambient rank r (number of coordinates of each side).  These are exactly
the lattice points of the Kostka cone in 2r coordinates, and exactly
the pairs with K(lambda, mu) > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import config
from .errors import InvalidPair, InvalidPartition, SizeCapExceeded

Partition = tuple[int, ...]


def as_partition(seq: Sequence[int] | Iterable[int]) -> Partition:
    """Validate and normalize to a trimmed partition tuple.

    Trailing zeros are removed; anything not weakly decreasing and
    nonnegative raises :class:`InvalidPartition`.
    """
    parts = tuple(seq)
    for p in parts:
        if not isinstance(p, (int,)) or isinstance(p, bool):
            raise InvalidPartition(f"non-integer part {p!r}")
        if p < 0:
            raise InvalidPartition(f"negative part {p}")
        if p > config.INT_CAP:
            raise InvalidPartition(f"part {p} exceeds 64-bit range")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise InvalidPartition(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def size(p: Sequence[int]) -> int:
    return sum(p)


def pad(p: Sequence[int], length: int) -> Partition:
    """Right-pad with zeros to the given length (must be >= len(p))."""
    if length < len(p):
        raise InvalidPartition(f"cannot pad length-{len(p)} partition to {length}")
    return tuple(p) + (0,) * (length - len(p))


def conjugate(p: Sequence[int]) -> Partition:
    """Transpose of the Young diagram: lambda'_j = #{i : lambda_i >= j}."""
    q = as_partition(p)
    if not q:
        return ()
    return tuple(sum(1 for part in q if part >= j) for j in range(1, q[0] + 1))


def prefix_sums(p: Sequence[int], length: int) -> tuple[int, ...]:
    """Cumulative sums padded out to ``length`` coordinates."""
    padded = pad(as_partition(p), max(length, len(as_partition(p))))
    out, acc = [], 0
    for v in padded[:length]:
        acc += v
        out.append(acc)
    total = sum(p)
    while len(out) < length:
        out.append(total)
    return tuple(out)


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Dominance order with equal totals: every prefix sum of ``a`` is >=
    the corresponding prefix sum of ``b``.  Unequal totals compare False
    rather than raising."""
    pa, pb = as_partition(a), as_partition(b)
    if size(pa) != size(pb):
        return False
    return prefix_dominates(pa, pb)


def prefix_dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Prefix-sum comparison only (no total-equality requirement)."""
    pa, pb = as_partition(a), as_partition(b)
    n = max(len(pa), len(pb), 1)
    return all(x >= y for x, y in zip(prefix_sums(pa, n), prefix_sums(pb, n)))


def in_kostka_cone(lam: Sequence[int], mu: Sequence[int], rank: int) -> bool:
    """Whether (lambda, mu) is a lattice point of the rank-``rank`` cone:
    both sides have at most ``rank`` parts, equal size, and lambda
    dominates mu."""
    pl, pm = as_partition(lam), as_partition(mu)
    if rank < 0 or len(pl) > rank or len(pm) > rank:
        return False
    return dominates(pl, pm)


@dataclass(frozen=True)
class KostkaPair:
    """A lattice point (lambda, mu) of the Kostka cone at a fixed rank.

    ``rank`` defaults to the smallest admissible value, max(len(lambda),
    len(mu)).  Construction fails with :class:`InvalidPair` unless the
    pair lies in the cone, so a KostkaPair is a certified point.
    """

    lam: Partition
    mu: Partition
    rank: int = -1

    def __post_init__(self) -> None:
        lam = as_partition(self.lam)
        mu = as_partition(self.mu)
        rank = self.rank
        if rank == -1:
            rank = max(len(lam), len(mu))
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "rank", rank)
        if not in_kostka_cone(lam, mu, rank):
            raise InvalidPair(
                f"({lam}, {mu}) is not in the Kostka cone at rank {rank}"
            )

    @property
    def n(self) -> int:
        """Number of boxes on each side."""
        return size(self.lam)

    @property
    def width(self) -> int:
        """lambda_1, the number of columns of the canonical matrix."""
        return self.lam[0] if self.lam else 0

    def padded(self) -> tuple[Partition, Partition]:
        return pad(self.lam, self.rank), pad(self.mu, self.rank)

    def key(self) -> tuple[Partition, Partition]:
        return (self.lam, self.mu)

    def __str__(self) -> str:
        return f"({format_partition(self.lam)} | {format_partition(self.mu)}; r={self.rank})"


def kostka_positive(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """K(lambda, mu) > 0, decided by dominance alone (no enumeration)."""
    return dominates(lam, mu)


def kostka_count(
    lam: Sequence[int], mu: Sequence[int], cap: int = config.BOX_CAP
) -> int:
    """The Kostka number K(lambda, mu): semistandard tableaux of shape
    lambda and content mu.

    Counted as chains of horizontal strips, memoized on intermediate
    shapes.  Mismatched totals give 0.  Raises :class:`SizeCapExceeded`
    when |lambda| > ``cap``.
    """
    pl, pm = as_partition(lam), as_partition(mu)
    if size(pl) > cap:
        raise SizeCapExceeded(f"|lambda| = {size(pl)} exceeds cap {cap}")
    if size(pl) != size(pm):
        return 0
    if not pl:
        return 1

    memo: dict[tuple[Partition, int], int] = {}

    def strip_removals(shape: Partition, k: int) -> Iterator[Partition]:
        # All partitions prev <= shape with shape/prev a horizontal strip
        # of size k: shape_{i+1} <= prev_i <= shape_i rowwise.
        rows = len(shape)

        def rec(i: int, remaining: int, acc: list[int]) -> Iterator[Partition]:
            if i == rows:
                if remaining == 0:
                    yield as_partition(acc)
                return
            lo = shape[i + 1] if i + 1 < rows else 0
            hi = shape[i]
            # prev_i = shape_i - t with t boxes removed from row i
            for t in range(min(remaining, hi - lo), -1, -1):
                acc.append(hi - t)
                yield from rec(i + 1, remaining - t, acc)
                acc.pop()

        yield from rec(0, k, [])

    def count(shape: Partition, i: int) -> int:
        if i == 0:
            return 1 if not shape else 0
        key = (shape, i)
        if key in memo:
            return memo[key]
        total = 0
        if len(shape) <= i:  # at most i values available for i rows
            for prev in strip_removals(shape, pm[i - 1]):
                total += count(prev, i - 1)
        memo[key] = total
        return total

    return count(pl, len(pm))


def enumerate_partitions(
    n: int, max_part: int | None = None, max_len: int | None = None
) -> Iterator[Partition]:
    """All partitions of ``n`` with the given bounds, in decreasing
    lexicographic order."""
    if n < 0:
        return
    first = n if max_part is None else min(max_part, n)
    length = n if max_len is None else max_len

    def rec(remaining: int, bound: int, slots: int, acc: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(acc)
            return
        if slots == 0 or bound == 0:
            return
        top = min(bound, remaining)
        for part in range(top, 0, -1):
            if part * slots < remaining:
                break
            acc.append(part)
            yield from rec(remaining - part, part, slots - 1, acc)
            acc.pop()

    yield from rec(n, first, length, [])


def dominated_partitions(
    lam: Sequence[int], max_len: int
) -> Iterator[Partition]:
    """All mu with |mu| = |lambda|, at most ``max_len`` parts, and
    lambda >= mu in dominance order."""
    pl = as_partition(lam)
    if not pl:
        yield ()
        return
    for mu in enumerate_partitions(size(pl), max_part=pl[0], max_len=max_len):
        if dominates(pl, mu):
            yield mu


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated partition; "0" and "" denote the empty one."""
    body = text.strip()
    if body in ("", "0", "()"):
        return ()
    try:
        parts = [int(tok) for tok in body.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise InvalidPartition(f"cannot parse partition from {text!r}") from exc
    return as_partition(parts)


def format_partition(p: Sequence[int]) -> str:
    q = as_partition(p)
    return ",".join(str(v) for v in q) if q else "0"


def render_diagram(p: Sequence[int]) -> str:
    """Young diagram as rows of '#' (English convention)."""
    q = as_partition(p)
    return "\n".join("#" * part for part in q)
