"""Hilbert bases and extremal rays of the Kostka cone at small rank.

A cone point is *irreducible* when it is nonzero and not the sum of two
nonzero cone points; the irreducible points form the Hilbert basis of
the semigroup of lattice points.  :func:`decompose` searches for a
summand by enumerating the ways each side can split into two partitions
(parameterized by choices in the consecutive-difference boxes) and
checking the two dominance conditions with vectorized prefix sums.

Irreducible pairs have lambda_1 <= rank (see :func:`width_bound_audit`),
so :func:`hilbert_basis` only needs candidates inside the rank x rank
box.

Extremal rays are classified: every ray is spanned by
lambda = a^(b+ell), mu = (a^ell, b^a) for r >= a+ell >= a >= b > 0, and
(a, a, ell) is parallel to (1, 1, a+ell-1), leaving
C(r,3) + C(r,2) + C(r,1) distinct rays.  :func:`is_extremal` runs that
classification *and* an exact tight-constraint rank test and insists
they agree.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import config
from .errors import (
    AssertionFailure,
    InconsistentExtremalityTests,
    RankCapExceeded,
    SizeCapExceeded,
)
from .partitions import (
    KostkaPair,
    Partition,
    as_partition,
    dominated_partitions,
    enumerate_partitions,
    pad,
    prefix_sums,
    size,
)

_SPLIT_MEMO: dict[Partition, tuple[np.ndarray, np.ndarray]] = {}


def _splittings(p: Partition) -> tuple[np.ndarray, np.ndarray]:
    """All vectors v such that v and p - v are both partitions, as a
    (count, len(p)) array plus the vector of sizes |v|.

    Such v correspond to independent choices d_i in
    [0, p_i - p_{i+1}]: v_i is the suffix sum of the d's.
    """
    if p in _SPLIT_MEMO:
        return _SPLIT_MEMO[p]
    length = len(p)
    deltas = [p[i] - (p[i + 1] if i + 1 < length else 0) for i in range(length)]
    combos = np.array(
        list(itertools.product(*(range(d + 1) for d in deltas))), dtype=np.int64
    ).reshape(-1, length)
    vectors = combos[:, ::-1].cumsum(axis=1)[:, ::-1] if length else combos
    _SPLIT_MEMO[p] = (vectors, vectors.sum(axis=1))
    return _SPLIT_MEMO[p]


def _lex_rows(mat: np.ndarray) -> np.ndarray:
    if mat.shape[0] <= 1 or mat.shape[1] == 0:
        return mat
    order = np.lexsort(tuple(mat[:, k] for k in range(mat.shape[1] - 1, -1, -1)))
    return mat[order]


def _padded_prefixes(vectors: np.ndarray, rank: int) -> np.ndarray:
    out = np.zeros((vectors.shape[0], rank), dtype=np.int64)
    out[:, : vectors.shape[1]] = vectors
    return out.cumsum(axis=1)


def decompose(
    pair: KostkaPair, cap: int = config.SPLIT_CAP
) -> tuple[KostkaPair, KostkaPair] | None:
    """A decomposition (small, large) of the pair into two nonzero cone
    points at the same rank, or None if the pair is irreducible (or
    zero).

    Deterministic: the witness is the first hit in (size of the small
    half, lexicographic small lambda-half, lexicographic small mu-half)
    order.  Raises :class:`SizeCapExceeded` when |lambda| > ``cap``.
    """
    n = pair.n
    if n > cap:
        raise SizeCapExceeded(f"|lambda| = {n} exceeds cap {cap}")
    if n == 0:
        return None
    r = pair.rank
    lam_v, lam_sizes = _splittings(pair.lam)
    mu_v, mu_sizes = _splittings(pair.mu)
    gap = np.asarray(prefix_sums(pair.lam, r), dtype=np.int64) - np.asarray(
        prefix_sums(pair.mu, r), dtype=np.int64
    )
    for m in range(1, n // 2 + 1):
        va = _lex_rows(lam_v[lam_sizes == m])
        if not va.shape[0]:
            continue
        vb = _lex_rows(mu_v[mu_sizes == m])
        if not vb.shape[0]:
            continue
        diff = _padded_prefixes(va, r)[:, None, :] - _padded_prefixes(vb, r)[None, :, :]
        ok = (diff >= 0).all(axis=2) & (diff <= gap[None, None, :]).all(axis=2)
        hits = np.argwhere(ok)
        if hits.size:
            i, j = hits[0]
            small_lam = as_partition(int(x) for x in va[i])
            small_mu = as_partition(int(x) for x in vb[j])
            large_lam = as_partition(
                a - b for a, b in zip(pad(pair.lam, r), pad(tuple(small_lam), r))
            )
            large_mu = as_partition(
                a - b for a, b in zip(pad(pair.mu, r), pad(tuple(small_mu), r))
            )
            return (
                KostkaPair(small_lam, small_mu, r),
                KostkaPair(large_lam, large_mu, r),
            )
    return None


def is_irreducible(pair: KostkaPair, cap: int = config.SPLIT_CAP) -> bool:
    """Nonzero and admitting no decomposition (the zero pair is not
    irreducible by convention)."""
    return pair.n > 0 and decompose(pair, cap) is None


# --- Hilbert basis ----------------------------------------------------------


@dataclass(frozen=True)
class BasisCatalog:
    """The Hilbert basis at a fixed rank, sorted by (size, lambda, mu)."""

    rank: int
    elements: tuple[KostkaPair, ...]

    @property
    def count(self) -> int:
        return len(self.elements)

    def keys(self) -> set[tuple[Partition, Partition]]:
        return {p.key() for p in self.elements}

    def payload(self) -> dict:
        elements = [[list(p.lam), list(p.mu)] for p in self.elements]
        return {
            "format_version": 1,
            "kind": "hilbert-basis",
            "rank": self.rank,
            "count": self.count,
            "elements": elements,
            "sha256": _element_hash(elements),
        }

    def save(self, path: Path | str) -> None:
        Path(path).write_text(json.dumps(self.payload(), indent=1, sort_keys=True) + "\n")


def _element_hash(elements: list) -> str:
    blob = json.dumps(elements, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def load_catalog(path: Path | str) -> BasisCatalog:
    """Read a catalog and verify its integrity hash; content is trusted,
    not recomputed."""
    data = json.loads(Path(path).read_text())
    if data.get("format_version") != 1 or data.get("kind") != "hilbert-basis":
        raise AssertionFailure(f"{path}: not a hilbert-basis catalog")
    if data["sha256"] != _element_hash(data["elements"]):
        raise AssertionFailure(f"{path}: content hash mismatch")
    rank = int(data["rank"])
    elements = tuple(
        KostkaPair(as_partition(lam), as_partition(mu), rank)
        for lam, mu in data["elements"]
    )
    if len(elements) != data["count"]:
        raise AssertionFailure(f"{path}: count field disagrees with elements")
    return BasisCatalog(rank=rank, elements=elements)


def catalog_diff(first: BasisCatalog, second: BasisCatalog) -> dict:
    a, b = first.keys(), second.keys()
    fmt = lambda keys: sorted([list(map(list, k)) for k in keys])
    return {
        "only_in_first": fmt(a - b),
        "only_in_second": fmt(b - a),
        "match": a == b,
    }


def default_fixture_path(rank: int) -> Path:
    return Path(__file__).parent / "fixtures" / f"basis_r{rank}.json"


def hilbert_basis(rank: int, cap: int = config.RANK_CAP) -> BasisCatalog:
    """Compute the Hilbert basis at the given rank by filtering every
    cone pair with lambda inside the rank x rank box through
    :func:`is_irreducible`."""
    if not 1 <= rank <= cap:
        raise RankCapExceeded(f"rank {rank} outside [1, {cap}]")
    elements: list[KostkaPair] = []
    for n in range(1, rank * rank + 1):
        for lam in enumerate_partitions(n, max_part=rank, max_len=rank):
            for mu in dominated_partitions(lam, max_len=rank):
                pair = KostkaPair(lam, mu, rank)
                if decompose(pair) is None:
                    elements.append(pair)
    elements.sort(key=lambda p: (p.n, p.lam, p.mu))
    return BasisCatalog(rank=rank, elements=tuple(elements))


# --- extremal rays ----------------------------------------------------------


@dataclass(frozen=True)
class RaySpec:
    """Parameters (a, b, ell) of the ray spanned by lambda = a^(b+ell),
    mu = (a^ell, b^a) at the given rank."""

    a: int
    b: int
    ell: int
    rank: int

    def __post_init__(self) -> None:
        if not (self.rank >= self.a + self.ell >= self.a >= self.b > 0):
            raise ValueError(
                f"need rank >= a+ell >= a >= b > 0, got {self!r}"
            )

    def pair(self) -> KostkaPair:
        lam = (self.a,) * (self.b + self.ell)
        mu = (self.a,) * self.ell + (self.b,) * self.a
        return KostkaPair(as_partition(lam), as_partition(mu), self.rank)


def primitive_point(spec: RaySpec) -> KostkaPair:
    """First lattice point on the ray: the spanning pair divided by
    gcd(a, b)."""
    g = math.gcd(spec.a, spec.b)
    lam = (spec.a // g,) * (spec.b + spec.ell)
    mu = (spec.a // g,) * spec.ell + (spec.b // g,) * spec.a
    return KostkaPair(as_partition(lam), as_partition(mu), spec.rank)


def extremal_rays(rank: int) -> tuple[RaySpec, ...]:
    """All extremal rays at the given rank, deduplicated ((a, a, ell) is
    parallel to (1, 1, a+ell-1)) and sorted by (a, b, ell)."""
    if rank < 1:
        return ()
    specs = [
        RaySpec(a=a, b=b, ell=ell, rank=rank)
        for a in range(1, rank + 1)
        for b in range(1, a)
        for ell in range(0, rank - a + 1)
    ]
    specs += [RaySpec(a=1, b=1, ell=ell, rank=rank) for ell in range(rank)]
    specs.sort(key=lambda s: (s.a, s.b, s.ell))
    expected = math.comb(rank, 3) + math.comb(rank, 2) + math.comb(rank, 1)
    if len(specs) != expected:
        raise AssertionFailure(
            f"ray count {len(specs)} != C(r,3)+C(r,2)+C(r,1) = {expected}"
        )
    return tuple(specs)


def _is_rectangle(p: Partition) -> bool:
    return len(set(p)) == 1 if p else False


def _family_membership(pair: KostkaPair) -> bool:
    """Whether the pair is a (rational) multiple of some ray spanning
    pair at its rank."""
    lam, mu = pair.lam, pair.mu
    if not _is_rectangle(lam):
        return False
    v, p = lam[0], len(lam)
    if mu == lam:
        return True
    values = sorted(set(mu), reverse=True)
    if len(values) == 2:
        x, y = values
        if x != v:
            return False
        ell = sum(1 for t in mu if t == x)
        m = len(mu) - ell
    elif len(values) == 1:
        y = values[0]
        if y >= v:
            return False
        ell, m = 0, len(mu)
    else:
        return False
    beta = p - ell
    return m >= beta >= 1 and y * m == v * beta


def _tight_rank(pair: KostkaPair) -> int:
    """Rank of the system of facet constraints the pair saturates
    (exact rational arithmetic)."""
    import sympy

    r = pair.rank
    lam, mu = pair.padded()
    rows: list[list[int]] = []

    def unit_diff(offset: int, i: int) -> list[int]:
        row = [0] * (2 * r)
        row[offset + i] = 1
        if offset + i + 1 < offset + r:
            row[offset + i + 1] = -1
        return row

    for offset, side in ((0, lam), (r, mu)):
        for i in range(r - 1):
            if side[i] == side[i + 1]:
                rows.append(unit_diff(offset, i))
        if side[r - 1] == 0:
            row = [0] * (2 * r)
            row[offset + r - 1] = 1
            rows.append(row)
    lam_pref = prefix_sums(lam, r)
    mu_pref = prefix_sums(mu, r)
    for t in range(1, r):
        if lam_pref[t - 1] == mu_pref[t - 1]:
            rows.append([1] * t + [0] * (r - t) + [-1] * t + [0] * (r - t))
    rows.append([1] * r + [-1] * r)
    return sympy.Matrix(rows).rank()


def is_extremal(pair: KostkaPair) -> bool:
    """Whether the pair lies on an extremal ray of its cone.

    Decided twice: by the ray classification and by checking that the
    pair's tight facet constraints have rank 2*rank - 1.  Disagreement
    raises :class:`InconsistentExtremalityTests`.
    """
    if pair.n == 0:
        return False
    family = _family_membership(pair)
    tight = _tight_rank(pair) == 2 * pair.rank - 1
    if family != tight:
        raise InconsistentExtremalityTests(
            f"classification says {family}, tight-rank test says {tight} for {pair}"
        )
    return family


def scale_pair(pair: KostkaPair, factor: int) -> KostkaPair:
    return KostkaPair(
        as_partition(factor * x for x in pair.lam),
        as_partition(factor * x for x in pair.mu),
        pair.rank,
    )


# --- width-bound audit ------------------------------------------------------


@dataclass(frozen=True)
class AuditReport:
    rank: int
    basis_count: int
    full_width_count: int
    boundary_pairs_checked: int
    box_cap: int


def width_bound_audit(rank: int, box_cap: int = 13) -> AuditReport:
    """Checks, raising :class:`AssertionFailure` on any violation:

    - every basis element has lambda_1 <= rank;
    - basis elements with lambda_1 = rank have both sides rectangular;
    - every cone pair with lambda_1 = rank + 1 and at most ``box_cap``
      boxes is reducible.
    """
    catalog = hilbert_basis(rank)
    full_width = 0
    for pair in catalog.elements:
        if pair.width > rank:
            raise AssertionFailure(f"basis pair {pair} is wider than the rank")
        if pair.width == rank:
            full_width += 1
            if not (_is_rectangle(pair.lam) and _is_rectangle(pair.mu)):
                raise AssertionFailure(
                    f"width-saturating basis pair {pair} is not a rectangle pair"
                )
    checked = 0
    for n in range(rank + 1, box_cap + 1):
        for lam in enumerate_partitions(n, max_part=rank + 1, max_len=rank):
            if not lam or lam[0] != rank + 1:
                continue
            for mu in dominated_partitions(lam, max_len=rank):
                pair = KostkaPair(lam, mu, rank)
                checked += 1
                if decompose(pair) is None:
                    raise AssertionFailure(
                        f"over-wide pair {pair} claims to be irreducible"
                    )
    return AuditReport(
        rank=rank,
        basis_count=catalog.count,
        full_width_count=full_width,
        boundary_pairs_checked=checked,
        box_cap=box_cap,
    )
