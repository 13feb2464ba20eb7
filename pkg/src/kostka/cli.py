"""Command-line interface.

Exit codes: 0 success / positive decision, 1 negative decision (e.g.
"not reducible", "no subset"), 2 usage errors (click), 3 a checked
internal assertion failed on concrete data.

``--format json`` output is serialized with sorted keys and fixed
indentation, so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from . import config
from .cone import (
    catalog_diff,
    decompose,
    default_fixture_path,
    extremal_rays,
    hilbert_basis,
    load_catalog,
    primitive_point,
    width_bound_audit,
)
from .errors import (
    AssertionFailure,
    InconsistentExtremalityTests,
    InvalidInstance,
    InvalidPair,
    InvalidPartition,
    InvalidSequence,
    InvalidTriple,
    LengthCapExceeded,
    MalformedStarMatrix,
    NotAWitness,
    RankCapExceeded,
    ShapeError,
    SizeCapExceeded,
    WidthCapExceeded,
    WidthTooSmall,
)
from .kgr import (
    build_graph,
    fast_reducibility,
    find_conservative_subtree,
    graph_payload,
    to_dot,
)
from .lr import growth_table, verify_counterexample
from .partitions import (
    KostkaPair,
    format_partition,
    in_kostka_cone,
    kostka_count,
    kostka_positive,
    parse_partition,
    size,
)
from .ryser import (
    DeleteColumn,
    ShortenRightmost,
    render_matrix,
    ryser_canonical,
    shape_sequence,
    star_matrix,
)
from .sequences import CatalanSeq, catalan_reducible, cost
from .subsetsum import SubsetSumInstance, reduction_equivalence_check

_INPUT_ERRORS = (
    InvalidPartition,
    InvalidPair,
    InvalidSequence,
    InvalidInstance,
    InvalidTriple,
    ShapeError,
    NotAWitness,
    SizeCapExceeded,
    WidthTooSmall,
    WidthCapExceeded,
    RankCapExceeded,
    LengthCapExceeded,
)
_INTERNAL_ERRORS = (
    AssertionFailure,
    InconsistentExtremalityTests,
    MalformedStarMatrix,
    AssertionError,
)


def _guarded(f):
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except _INPUT_ERRORS as exc:
            raise click.UsageError(str(exc))
        except _INTERNAL_ERRORS as exc:
            click.echo(f"internal check failed: {exc}", err=True)
            sys.exit(3)

    return wrapper


def _format_option(f):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["text", "json"]),
        default="text",
        envvar="KOSTKA_FORMAT",
        show_default=True,
        help="output format",
    )(f)


def _rank_option(f):
    return click.option(
        "--rank", "-r", type=int, default=None, help="ambient rank (default: minimal)"
    )(f)


def _emit(payload: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            click.echo(line)


def _pair_payload(pair: KostkaPair) -> dict:
    return {"lambda": list(pair.lam), "mu": list(pair.mu), "rank": pair.rank}


def _build_pair(lam_text: str, mu_text: str, rank: int | None) -> KostkaPair:
    lam, mu = parse_partition(lam_text), parse_partition(mu_text)
    r = rank if rank is not None else max(len(lam), len(mu))
    return KostkaPair(lam, mu, r)


def _step_payload(step) -> dict:
    if isinstance(step, DeleteColumn):
        return {"kind": "delete-column", "length": step.length}
    if isinstance(step, ShortenRightmost):
        return {
            "kind": "shorten-rightmost",
            "length": step.length,
            "new_length": step.new_length,
        }
    return {
        "kind": "shorten-and-delete",
        "length": step.length,
        "new_length": step.new_length,
        "deleted_length": step.deleted_length,
    }


@click.group()
def main() -> None:
    """Exact computations on Kostka cone pairs: canonical matrices,
    reducibility certificates, Hilbert bases, and extremal rays."""


@main.command()
@click.argument("lam")
@click.argument("mu")
@_rank_option
@_format_option
@click.option(
    "--cap-boxes",
    type=int,
    default=config.BOX_CAP,
    envvar="KOSTKA_CAP_BOXES",
    show_default=True,
    help="largest |lambda| for which the Kostka number is counted",
)
@_guarded
def check(lam: str, mu: str, rank: int | None, fmt: str, cap_boxes: int) -> None:
    """Cone membership and Kostka positivity of a pair."""
    pl, pm = parse_partition(lam), parse_partition(mu)
    r = rank if rank is not None else max(len(pl), len(pm))
    member = in_kostka_cone(pl, pm, r)
    positive = kostka_positive(pl, pm)
    count = kostka_count(pl, pm) if size(pl) <= cap_boxes else None
    payload = {
        "lambda": list(pl),
        "mu": list(pm),
        "rank": r,
        "in_cone": member,
        "kostka_positive": positive,
        "kostka_count": count,
    }
    _emit(
        payload,
        fmt,
        [
            f"pair: ({format_partition(pl)} | {format_partition(pm)}), rank {r}",
            f"in cone: {member}",
            f"Kostka positive: {positive}",
            f"Kostka count: {count if count is not None else 'skipped (cap)'}",
        ],
    )
    sys.exit(0 if member else 1)


@main.command()
@click.argument("lam")
@click.argument("mu")
@_rank_option
@_format_option
@_guarded
def ryser(lam: str, mu: str, rank: int | None, fmt: str) -> None:
    """Canonical matrix, star matrix, and shape-peeling sequence."""
    pair = _build_pair(lam, mu, rank)
    canonical = ryser_canonical(pair)
    star = star_matrix(canonical)
    seq = shape_sequence(pair)
    payload = {
        "pair": _pair_payload(pair),
        "matrix": [list(row) for row in canonical.entries],
        "chain": [[list(row) for row in stage] for stage in canonical.chain],
        "star": [list(row) for row in star.entries],
        "mu_star": list(star.mu_star),
        "shapes": [list(s) for s in seq.shapes],
        "steps": [_step_payload(s) for s in seq.steps],
    }
    lines = [f"pair: {pair}"]
    for i, stage in enumerate(canonical.chain):
        lines += [f"A^({i}):", render_matrix(stage)]
    lines += ["A*:", render_matrix(star.entries), f"mu*: {list(star.mu_star)}"]
    lines.append(
        "shapes: " + "  >  ".join(format_partition(s) for s in seq.shapes)
    )
    for i, step in enumerate(seq.steps, start=1):
        lines.append(f"step {i}: {_step_payload(step)}")
    _emit(payload, fmt, lines)


@main.command()
@click.argument("lam")
@click.argument("mu")
@_rank_option
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "dot"]),
    default="text",
    envvar="KOSTKA_FORMAT",
    show_default=True,
)
@_guarded
def kgr(lam: str, mu: str, rank: int | None, fmt: str) -> None:
    """Arc graph of the star matrix, with a conservative subtree when
    one exists (highlighted in dot output)."""
    pair = _build_pair(lam, mu, rank)
    graph = build_graph(star_matrix(ryser_canonical(pair)))
    witness = find_conservative_subtree(graph)
    if fmt == "dot":
        click.echo(to_dot(graph, witness))
        return
    payload = {"pair": _pair_payload(pair), **graph_payload(graph, witness)}
    lines = [
        f"pair: {pair}",
        f"vertices: {len(graph.vertices)}, arcs: {len(graph.arcs)}, "
        f"connected: {payload['connected']}",
    ]
    for tail, head in graph.arcs:
        lines.append(
            f"  ({tail.row},{tail.col}) -> ({head.row},{head.col})"
        )
    if witness is None:
        lines.append("conservative subtree: none")
    else:
        lines.append(
            f"conservative subtree ({witness.kind}): columns {list(witness.columns)}, "
            f"vertices {[(v.row, v.col) for v in witness.vertices]}"
        )
    _emit(payload, fmt, lines)


@main.command()
@click.argument("lam")
@click.argument("mu")
@_rank_option
@_format_option
@click.option(
    "--cap-boxes",
    type=int,
    default=config.SPLIT_CAP,
    envvar="KOSTKA_CAP_BOXES",
    show_default=True,
    help="largest |lambda| for the decomposition search",
)
@_guarded
def reduce(lam: str, mu: str, rank: int | None, fmt: str, cap_boxes: int) -> None:
    """Reducibility: graph-driven fast detection plus the complete
    decomposition search.  Exit 1 when the pair is irreducible."""
    pair = _build_pair(lam, mu, rank)
    fast = fast_reducibility(pair)
    found = decompose(pair, cap_boxes)
    if fast is not None and found is None:
        raise AssertionFailure(
            f"graph detection split {pair} but the decomposition search found nothing"
        )
    payload = {
        "pair": _pair_payload(pair),
        "fast": None
        if fast is None
        else {
            "columns": list(fast.columns),
            "kind": fast.witness.kind,
            "selected": _pair_payload(fast.selected),
            "complement": _pair_payload(fast.complement),
        },
        "decomposition": None
        if found is None
        else {"small": _pair_payload(found[0]), "large": _pair_payload(found[1])},
        "irreducible": found is None,
    }
    lines = [f"pair: {pair}"]
    if fast is None:
        lines.append("fast detection: no conservative subtree")
    else:
        lines.append(
            f"fast detection: columns {list(fast.columns)} -> "
            f"{fast.selected} + {fast.complement}"
        )
    if found is None:
        lines.append("decomposition search: irreducible")
    else:
        lines.append(f"decomposition search: {found[0]} + {found[1]}")
    _emit(payload, fmt, lines)
    sys.exit(1 if found is None else 0)


@main.command()
@click.option("--rank", "-r", type=int, required=True)
@_format_option
@click.option(
    "--fixtures",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    envvar="KOSTKA_FIXTURES",
    help="directory of catalog fixtures (default: packaged)",
)
@click.option(
    "--jobs",
    type=int,
    default=1,
    envvar="KOSTKA_JOBS",
    show_default=True,
    help="accepted for compatibility; evaluation is serial",
)
@_guarded
def basis(rank: int, fmt: str, fixtures: Path | None, jobs: int) -> None:
    """Hilbert basis at a rank, compared against the persisted catalog
    when one is present (mismatch exits 3 with a structural diff)."""
    if jobs < 1:
        raise click.UsageError("--jobs must be >= 1")
    catalog = hilbert_basis(rank)
    path = (
        Path(fixtures) / f"basis_r{rank}.json" if fixtures else default_fixture_path(rank)
    )
    fixture_info = None
    if path.exists():
        diff = catalog_diff(catalog, load_catalog(path))
        fixture_info = {"path": str(path), **diff}
        if not diff["match"]:
            click.echo(f"fixture mismatch against {path}:", err=True)
            click.echo(json.dumps(diff, indent=2, sort_keys=True), err=True)
            sys.exit(3)
    payload = {
        "rank": rank,
        "count": catalog.count,
        "elements": [[list(p.lam), list(p.mu)] for p in catalog.elements],
        "fixture": fixture_info,
    }
    lines = [f"rank {rank}: {catalog.count} basis elements"]
    lines += [f"  {p}" for p in catalog.elements]
    if fixture_info:
        lines.append(f"fixture {path}: match")
    _emit(payload, fmt, lines)


@main.command()
@click.option("--rank", "-r", type=int, required=True)
@_format_option
@_guarded
def rays(rank: int, fmt: str) -> None:
    """Extremal rays at a rank with their primitive lattice points."""
    specs = extremal_rays(rank)
    payload = {
        "rank": rank,
        "count": len(specs),
        "rays": [
            {
                "a": s.a,
                "b": s.b,
                "ell": s.ell,
                "lambda": list(s.pair().lam),
                "mu": list(s.pair().mu),
                "primitive_lambda": list(primitive_point(s).lam),
                "primitive_mu": list(primitive_point(s).mu),
            }
            for s in specs
        ],
    }
    lines = [f"rank {rank}: {len(specs)} extremal rays"]
    lines += [
        f"  (a={s.a}, b={s.b}, ell={s.ell}): primitive {primitive_point(s)}"
        for s in specs
    ]
    _emit(payload, fmt, lines)


@main.command()
@click.option("--rank", "-r", type=int, required=True)
@_format_option
@click.option(
    "--cap-boxes",
    type=int,
    default=13,
    envvar="KOSTKA_CAP_BOXES",
    show_default=True,
    help="box cap for the over-wide boundary sweep",
)
@_guarded
def audit(rank: int, fmt: str, cap_boxes: int) -> None:
    """Width-bound audit of the basis at a rank (exit 3 on violation)."""
    report = width_bound_audit(rank, box_cap=cap_boxes)
    payload = {
        "rank": report.rank,
        "basis_count": report.basis_count,
        "full_width_count": report.full_width_count,
        "boundary_pairs_checked": report.boundary_pairs_checked,
        "box_cap": report.box_cap,
        "ok": True,
    }
    _emit(
        payload,
        fmt,
        [
            f"rank {rank}: audit passed",
            f"  basis elements: {report.basis_count}",
            f"  width-saturating elements: {report.full_width_count}",
            f"  over-wide pairs checked reducible: {report.boundary_pairs_checked}",
        ],
    )


@main.command()
@click.argument("sequence")
@_format_option
@click.option(
    "--cap-width",
    type=int,
    default=config.LENGTH_CAP,
    envvar="KOSTKA_CAP_WIDTH",
    show_default=True,
    help="longest sequence swept for witnesses",
)
@_guarded
def catalan(sequence: str, fmt: str, cap_width: int) -> None:
    """Cost, width, and sublist reducibility of a generalized Catalan
    sequence (comma-separated entries).  Exit 1 when irreducible."""
    try:
        entries = tuple(int(tok) for tok in sequence.split(",") if tok.strip())
    except ValueError as exc:
        raise click.UsageError(f"cannot parse sequence {sequence!r}") from exc
    x = CatalanSeq(entries)
    c, t = cost(x), x.width
    witness = catalan_reducible(x, cap_width)
    if c < t and witness is None:
        raise AssertionFailure(
            f"cost {c} < width {t} but no witness found for {x.entries}"
        )
    payload = {
        "entries": list(x.entries),
        "cost": c,
        "width": t,
        "reducible": witness is not None,
        "witness": None if witness is None else list(witness),
    }
    _emit(
        payload,
        fmt,
        [
            f"entries: {list(x.entries)}",
            f"cost: {c}, width: {t}",
            f"witness: {list(witness) if witness else 'none'}",
        ],
    )
    sys.exit(0 if witness else 1)


@main.command()
@click.argument("instance")
@_format_option
@_guarded
def subsetsum(instance: str, fmt: str) -> None:
    """Reduce a subset-sum instance "a1,a2,...,ad : b" to a cone pair
    and verify the equivalence both ways.  Exit 1 on a no-instance."""
    if ":" not in instance:
        raise click.UsageError('instance must look like "3,2,1 : 4"')
    left, right = instance.split(":", 1)
    try:
        values = tuple(int(tok) for tok in left.split(",") if tok.strip())
        target = int(right.strip())
    except ValueError as exc:
        raise click.UsageError(f"cannot parse instance {instance!r}") from exc
    if values and target > sum(values):
        payload = {
            "values": list(values),
            "target": target,
            "subset": None,
            "trivial": "target exceeds total",
        }
        _emit(payload, fmt, [f"no subset: target {target} exceeds total {sum(values)}"])
        sys.exit(1)
    report = reduction_equivalence_check(SubsetSumInstance(values, target))
    payload = {
        "values": list(report.instance.values),
        "target": report.instance.target,
        "pair": _pair_payload(report.pair),
        "coordinates": report.coordinates,
        "subset": None if report.subset is None else list(report.subset),
        "decomposition": None
        if report.decomposition is None
        else {
            "selected": _pair_payload(report.decomposition[0]),
            "complement": _pair_payload(report.decomposition[1]),
        },
    }
    lines = [
        f"sorted values: {list(report.instance.values)}, target {report.instance.target}",
        f"pair: {report.pair} ({report.coordinates} coordinates)",
        f"subset: {list(report.subset) if report.subset else 'none'}",
    ]
    if report.decomposition:
        lines.append(
            f"decomposition: {report.decomposition[0]} + {report.decomposition[1]}"
        )
    _emit(payload, fmt, lines)
    sys.exit(0 if report.subset else 1)


@main.command(name="lr-family")
@click.option("--k", type=click.IntRange(min=2), required=True)
@click.option("--growth-to", type=int, default=None, help="table bound (default: k)")
@_format_option
@_guarded
def lr_family(k: int, growth_to: int | None, fmt: str) -> None:
    """The wide triple family: identities, positivity within the
    counting cap, and the nu_1 growth table."""
    report = verify_counterexample(k)
    bound = growth_to if growth_to is not None else k
    rows = growth_table(bound)
    payload = {
        "k": k,
        "rank": report.rank,
        "lambda": list(report.triple.lam),
        "mu": list(report.triple.mu),
        "nu": list(report.triple.nu),
        "nu1": report.nu1,
        "exceeds_rank": report.exceeds_rank,
        "coefficient": report.coefficient,
        "growth": [
            {"k": r.k, "rank": r.rank, "nu1": r.nu1, "exceeds_rank": r.exceeds_rank}
            for r in rows
        ],
    }
    lines = [
        f"k={k}: rank {report.rank}",
        f"lambda: {format_partition(report.triple.lam)}",
        f"mu: {format_partition(report.triple.mu)}",
        f"nu: {format_partition(report.triple.nu)}",
        f"nu_1 = {report.nu1} ({'exceeds' if report.exceeds_rank else 'within'} rank)",
        f"coefficient: {report.coefficient if report.coefficient is not None else 'beyond cap'}",
    ]
    lines += [
        f"  k={r.k}: rank {r.rank}, nu_1 {r.nu1}"
        + (" > rank" if r.exceeds_rank else "")
        for r in rows
    ]
    _emit(payload, fmt, lines)


if __name__ == "__main__":
    main()
