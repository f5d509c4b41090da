"""Command-line front end: bound tables, tableau listings, verification
sweeps and variational maximization runs.

Exit codes: 0 success, 1 verification failure, 2 usage error.  All rationals
print as p/q; JSON output carries a top-level schema tag and is
byte-identical for fixed flags and seed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import click

from .special_states import optimizer_state
from .spectral import (
    MaximizeConfig,
    max_lambda1_over_subspace,
    schmidt_decompose,
    verify_fixed_point,
)
from .tensor_space import DimensionCapError, block_basis, flat_dim_cap
from .verification import run_verification
from .young import (
    YoungDiagram,
    bound_for_box,
    dim_symmetric_group_irrep,
    dim_unitary_group_irrep,
    entropy_lower_bound,
    enumerate_standard_tableaux,
    max_schmidt_bound,
    partitions_of,
    removable_boxes,
)

SCHEMA = "1"


@dataclass
class RunConfig:
    """Parsed options shared by the randomized commands."""

    command: str
    partition: str
    d: int
    cut: int | None = None
    restarts: int = 32
    max_iterations: int = 500
    tolerance: float = 1e-10
    fmt: str = "text"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.d < 1:
            raise click.UsageError("d must be at least 1")
        if self.restarts < 1:
            raise click.UsageError("restarts must be at least 1")
        if self.tolerance <= 0:
            raise click.UsageError("tolerance must be positive")


def _parse_partition(text: str) -> YoungDiagram:
    try:
        return YoungDiagram.from_string(text)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _require_boxes(diagram: YoungDiagram, minimum: int) -> None:
    if diagram.n_boxes < minimum:
        raise click.UsageError(
            f"partition must have at least {minimum} boxes, got {diagram.n_boxes}"
        )


def _check_cap(d: int, n: int) -> None:
    if d**n > flat_dim_cap():
        raise click.UsageError(
            f"d**n = {d**n} exceeds the cap {flat_dim_cap()}; "
            "set SCHURWEYL_CAP to raise it"
        )


def _emit_json(payload: dict) -> None:
    click.echo(json.dumps(payload, indent=2))


def _bound_payload(diagram: YoungDiagram) -> dict:
    per_box = [
        {"row": box.row, "col": box.col, "bound": str(bound_for_box(diagram, box))}
        for box in removable_boxes(diagram)
    ]
    value, witness = max_schmidt_bound(diagram)
    return {
        "partition": str(diagram),
        "n_boxes": diagram.n_boxes,
        "boxes": per_box,
        "max_bound": str(value),
        "witness_box": {"row": witness.row, "col": witness.col},
        "entropy_lower_bound": entropy_lower_bound(diagram),
    }


@click.group()
def main() -> None:
    """Exact entanglement bounds for Young-diagram subspaces, with numerical
    projector machinery to verify them."""


@main.command()
@click.option("--partition", required=True, help="Comma-separated row lengths, e.g. 3,2,1.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
def bound(partition: str, fmt: str) -> None:
    """Exact hook-length bound for one partition."""
    diagram = _parse_partition(partition)
    _require_boxes(diagram, 2)
    payload = {"schema": SCHEMA, "command": "bound", **_bound_payload(diagram)}
    if fmt == "json":
        _emit_json(payload)
        return
    click.echo(f"partition {diagram}  (N = {diagram.n_boxes})")
    for entry in payload["boxes"]:
        click.echo(f"  box ({entry['row']},{entry['col']}): {entry['bound']}")
    w = payload["witness_box"]
    click.echo(f"max bound {payload['max_bound']} at box ({w['row']},{w['col']})")
    click.echo(f"entropy lower bound {payload['entropy_lower_bound']:.12g}")


@main.command()
@click.option("--partition", required=True, help="Comma-separated row lengths.")
@click.option("--d", "d", type=int, default=None,
              help="Local dimension for the unitary-group dimension [default: number of rows].")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
def tableaux(partition: str, d: int | None, fmt: str) -> None:
    """List the standard tableaux of a partition in canonical order."""
    diagram = _parse_partition(partition)
    _require_boxes(diagram, 1)
    d = diagram.n_rows if d is None else d
    if d < 1:
        raise click.UsageError("d must be at least 1")
    listing = []
    for t in enumerate_standard_tableaux(diagram):
        flags = []
        if t.is_row_ordered():
            flags.append("row-ordered")
        if t.is_column_ordered():
            flags.append("column-ordered")
        listing.append({"tableau": str(t), "flags": flags})
    payload = {
        "schema": SCHEMA,
        "command": "tableaux",
        "partition": str(diagram),
        "d": d,
        "dim_symmetric_group_irrep": dim_symmetric_group_irrep(diagram),
        "dim_unitary_group_irrep": dim_unitary_group_irrep(diagram, d),
        "tableaux": listing,
    }
    if fmt == "json":
        _emit_json(payload)
        return
    click.echo(
        f"partition {diagram}: {len(listing)} standard tableaux, "
        f"dim S = {payload['dim_symmetric_group_irrep']}, "
        f"dim V(d={d}) = {payload['dim_unitary_group_irrep']}"
    )
    for i, entry in enumerate(listing, start=1):
        suffix = ("   " + ", ".join(entry["flags"])) if entry["flags"] else ""
        click.echo(f"  {i}: {entry['tableau']}{suffix}")


@main.command()
@click.option("--partition", required=True, help="Comma-separated row lengths.")
@click.option("--d", "d", type=int, default=None,
              help="Local dimension [default: number of rows].")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--samples", type=int, default=5, show_default=True,
              help="Random states per check.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
@click.pass_context
def verify(ctx: click.Context, partition: str, d: int | None, seed: int,
           samples: int, fmt: str) -> None:
    """Run the full cross-check suite for one partition; exit 1 on failure."""
    diagram = _parse_partition(partition)
    _require_boxes(diagram, 1)
    d = diagram.n_rows if d is None else d
    if d < 1:
        raise click.UsageError("d must be at least 1")
    _check_cap(d, diagram.n_boxes)
    results = run_verification(diagram, d, seed=seed, samples=samples)
    ok = all(r.passed for r in results)
    payload = {
        "schema": SCHEMA,
        "command": "verify",
        "partition": str(diagram),
        "d": d,
        "seed": seed,
        "checks": [
            {
                "name": r.name,
                "residual": r.residual,
                "tolerance": r.tolerance,
                "passed": r.passed,
                "detail": r.detail,
            }
            for r in results
        ],
        "passed": ok,
    }
    if fmt == "json":
        _emit_json(payload)
    else:
        click.echo(f"verify {diagram}  d={d}  seed={seed}")
        for r in results:
            mark = "pass" if r.passed else "FAIL"
            detail = f"  ({r.detail})" if r.detail else ""
            click.echo(
                f"  [{mark}] {r.name:34s} residual {r.residual:.3e}  "
                f"tol {r.tolerance:.0e}{detail}"
            )
        click.echo(
            f"{sum(r.passed for r in results)}/{len(results)} checks passed"
        )
    if not ok:
        ctx.exit(1)


@main.command()
@click.option("--partition", required=True, help="Comma-separated row lengths.")
@click.option("--d", "d", type=int, default=None,
              help="Local dimension [default: number of rows].")
@click.option("--cut", type=int, default=None,
              help="Cut position k, splitting factors 1..k from the rest [default: N-1].")
@click.option("--restarts", type=int, default=32, show_default=True)
@click.option("--max-iterations", type=int, default=500, show_default=True)
@click.option("--tolerance", type=float, default=1e-10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--trace/--no-trace", "trace", default=False,
              help="Include objective traces in JSON output.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
def maximize(partition: str, d: int | None, cut: int | None, restarts: int,
             max_iterations: int, tolerance: float, seed: int, trace: bool,
             fmt: str) -> None:
    """Numerically maximize the leading squared Schmidt coefficient over a block."""
    diagram = _parse_partition(partition)
    _require_boxes(diagram, 2)
    n = diagram.n_boxes
    d = diagram.n_rows if d is None else d
    config = RunConfig(
        command="maximize", partition=str(diagram), d=d,
        cut=n - 1 if cut is None else cut, restarts=restarts,
        max_iterations=max_iterations, tolerance=tolerance, fmt=fmt, seed=seed,
    )
    if not 1 <= config.cut <= n - 1:
        raise click.UsageError(f"cut must lie in 1..{n - 1}")
    if d < diagram.n_rows:
        click.echo(
            f"warning: d={d} is below the number of rows {diagram.n_rows}; "
            "the block is empty",
            err=True,
        )
        raise click.UsageError("no block to maximize over at this d")
    _check_cap(d, n)
    try:
        basis = block_basis(diagram, d)
    except DimensionCapError as exc:
        raise click.UsageError(str(exc)) from exc
    exact, witness = max_schmidt_bound(diagram)

    pairs = []
    if config.cut == n - 1:
        seed_state = optimizer_state(diagram, witness, d=d)
        sr = schmidt_decompose(seed_state, config.cut)
        pairs.append((sr.left_vectors[0], sr.right_vectors[0]))
    report = max_lambda1_over_subspace(
        basis,
        config.cut,
        MaximizeConfig(
            restarts=restarts, max_iterations=max_iterations,
            tol=tolerance, seed=seed,
        ),
        analytic_bound=exact,
        initial_pairs=pairs,
    )
    residual = verify_fixed_point(report.maximizer, basis, config.cut)
    gap = abs(float(exact) - report.best_lambda1_sq)
    payload = {
        "schema": SCHEMA,
        "command": "maximize",
        "partition": str(diagram),
        "d": d,
        "cut": config.cut,
        "seed": seed,
        "restarts": report.restarts,
        "seeded_restarts": len(pairs),
        "exact_bound": str(exact),
        "witness_box": {"row": witness.row, "col": witness.col},
        "best_lambda1_sq": report.best_lambda1_sq,
        "gap": gap,
        "fixed_point_residual": residual,
        "iterations": list(report.iterations),
        "converged": list(report.converged),
        "report": report.to_json_dict(include_trace=trace),
    }
    if fmt == "json":
        _emit_json(payload)
        return
    click.echo(f"partition {diagram}  d={d}  cut={config.cut}  seed={seed}")
    click.echo(f"exact bound          {exact}  at box ({witness.row},{witness.col})")
    click.echo(f"numeric max          {report.best_lambda1_sq:.12f}")
    click.echo(f"gap                  {gap:.3e}")
    click.echo(f"fixed-point residual {residual:.3e}")
    click.echo(
        f"restarts {report.restarts} ({len(pairs)} seeded), "
        f"converged {sum(report.converged)}/{report.restarts}"
    )


@main.command()
@click.option("--max-n", type=int, required=True,
              help="Number of boxes; every partition of this size is tabulated.")
@click.option("--max-d", type=int, default=None,
              help="Also tabulate the unitary-group dimension at this d.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
def sweep(max_n: int, max_d: int | None, fmt: str) -> None:
    """Bound table over all partitions of max-n boxes."""
    if max_n < 2:
        raise click.UsageError("max-n must be at least 2")
    if max_d is not None and max_d < 1:
        raise click.UsageError("max-d must be at least 1")
    rows = []
    for diagram in partitions_of(max_n):
        entry = _bound_payload(diagram)
        entry["dim_symmetric_group_irrep"] = dim_symmetric_group_irrep(diagram)
        if max_d is not None:
            entry["dim_unitary_group_irrep"] = dim_unitary_group_irrep(diagram, max_d)
        rows.append(entry)
    payload = {
        "schema": SCHEMA,
        "command": "sweep",
        "max_n": max_n,
        "max_d": max_d,
        "partitions": rows,
    }
    if fmt == "json":
        _emit_json(payload)
        return
    click.echo(f"partitions of {max_n}:")
    for entry in rows:
        w = entry["witness_box"]
        boxes = ", ".join(
            f"({b['row']},{b['col']})={b['bound']}" for b in entry["boxes"]
        )
        dims = f"dim S = {entry['dim_symmetric_group_irrep']}"
        if max_d is not None:
            dims += f", dim V(d={max_d}) = {entry['dim_unitary_group_irrep']}"
        click.echo(
            f"  {entry['partition']:12s} max {entry['max_bound']:>6s} at "
            f"({w['row']},{w['col']})  entropy >= {entry['entropy_lower_bound']:.6f}  "
            f"[{boxes}]  {dims}"
        )
