"""Command-line interface.

Exit codes, uniform across subcommands:

* 0 — positive decision (feasible / extendible / recognized / generated)
* 1 — negative decision (infeasible / not extendible / not proper interval)
* 2 — invalid input (bad file, inconsistent pre-drawn intervals, missing
      component order for a disconnected graph, bad gadget sizes)
* 3 — cross-check mismatch (``boundrep --mode both``, ``oracle``)

Representations go to stdout as ``v l r`` lines; metadata rides along as
``#`` comment lines, which every parser here ignores.  Diagnostics go to
stderr.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import io as tio
from .gadgets import (
    DecodeError,
    InvalidThreePartitionError,
    decode_partition,
    gen_gadget,
)
from .graph import Graph, connected_components
from .grid import GridSpec, compute_epsilon, format_rational
from .oracle import check_valid, oracle_boundrep
from .ordering import NotProperIntervalError, compute_proper_ordering
from .pipeline import repext_unit, solve_boundrep
from .properext import InvalidPartialError, extend_proper
from .randgen import bench_instance
from .solver import BoundRepInstance, SolveResult, solve_boundrep_prescribed

OK, NEGATIVE, INVALID, MISMATCH = 0, 1, 2, 3


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return INVALID


# ---------------------------------------------------------------------------
# recognize
# ---------------------------------------------------------------------------


def cmd_recognize(args: argparse.Namespace) -> int:
    graph = tio.parse_graph(_read(args.graph))
    lines = []
    for ci, comp in enumerate(connected_components(graph)):
        local = graph.induced(comp)
        try:
            ordering = compute_proper_ordering(local)
        except NotProperIntervalError as exc:
            print(
                "not a proper interval graph "
                f"(witness vertex {comp[exc.witness]}: its closed neighborhood "
                "cannot be consecutive in any vertex order)"
            )
            return NEGATIVE
        groups = " ".join(
            "(" + " ".join(str(comp[v]) for v in ordering.groups.groups[gi]) + ")"
            for gi in ordering.sequence
        )
        lines.append(f"component {ci}: {groups}")
    print("proper interval graph")
    for line in lines:
        print(line)
    return OK


# ---------------------------------------------------------------------------
# boundrep
# ---------------------------------------------------------------------------


def _load_instance(
    args: argparse.Namespace,
) -> tuple[BoundRepInstance, tuple[int, ...] | None]:
    graph = tio.parse_graph(_read(args.graph))
    lbounds, ubounds, file_order = {}, {}, None
    if args.bounds is not None:
        lbounds, ubounds, file_order = tio.parse_bounds(_read(args.bounds), graph.n)
    order = file_order
    if getattr(args, "order", None) is not None:
        order = tuple(int(t) for t in args.order.split(","))
    return BoundRepInstance(graph=graph, lbounds=lbounds, ubounds=ubounds), order


def _print_solution(result: SolveResult, *, grid: bool) -> None:
    if grid:
        print(f"# eps {result.eps.eps} (eps_prime {result.eps.eps_prime}, mode {result.eps.mode})")
    print("# order " + " ".join(str(c) for c in result.comp_order))
    print("# directions " + " ".join(result.directions))
    print(f"# extent {format_rational(result.extent)}")
    sys.stdout.write(tio.format_rep_unit(result.ell))


def _print_infeasible(result: SolveResult) -> int:
    where = (
        f" at component {result.failed_component}"
        if result.failed_component is not None
        else ""
    )
    print(f"infeasible{where}")
    return NEGATIVE


def cmd_boundrep(args: argparse.Namespace) -> int:
    instance, order = _load_instance(args)
    graph = instance.graph
    ncomp = len(connected_components(graph))
    if order is None and not args.fpt and ncomp > 1:
        return _fail(
            f"graph has {ncomp} components: give --order c0,c1,... "
            "(or an 'order' line in the bounds file), or use --fpt"
        )

    def solve(mode: str, eps: GridSpec | None = None) -> SolveResult:
        if args.fpt:
            return solve_boundrep(instance, mode=mode, eps=eps, reduced=not args.full)
        return solve_boundrep_prescribed(
            instance, order, mode=mode, eps=eps, reduced=not args.full
        )

    try:
        if args.mode == "both":
            shared = compute_epsilon(instance.all_bounds(), graph.n, "shift")
            first = solve("shift", shared)
            if first.feasible:
                second = solve_boundrep_prescribed(
                    instance, first.comp_order, mode="lp", eps=shared,
                    reduced=not args.full,
                )
            else:
                second = solve("lp", shared)
            if first.feasible != second.feasible or (
                first.feasible and first.ell != second.ell
            ):
                print("mismatch between shift and lp engines", file=sys.stderr)
                print(f"shift: {first}", file=sys.stderr)
                print(f"lp:    {second}", file=sys.stderr)
                return MISMATCH
            result = first
        else:
            result = solve(args.mode)
    except NotProperIntervalError as exc:
        print(str(exc))
        return NEGATIVE
    if not result.feasible:
        return _print_infeasible(result)
    _print_solution(result, grid=args.grid)
    return OK


# ---------------------------------------------------------------------------
# extension commands
# ---------------------------------------------------------------------------


def cmd_extend_proper(args: argparse.Namespace) -> int:
    graph = tio.parse_graph(_read(args.graph))
    partial = tio.parse_partial_proper(_read(args.partial), graph.n)
    rep = extend_proper(graph, partial)
    if rep is None:
        print("not extendible")
        return NEGATIVE
    sys.stdout.write(tio.format_rep_proper(rep))
    return OK


def cmd_extend_unit(args: argparse.Namespace) -> int:
    graph = tio.parse_graph(_read(args.graph))
    located = tio.parse_partial_unit(_read(args.partial), graph.n)
    try:
        ell = repext_unit(graph, located, mode=args.mode)
    except NotProperIntervalError as exc:
        print(str(exc))
        return NEGATIVE
    if ell is None:
        print("not extendible")
        return NEGATIVE
    sys.stdout.write(tio.format_rep_unit(ell))
    return OK


# ---------------------------------------------------------------------------
# oracle cross-check
# ---------------------------------------------------------------------------


def cmd_oracle(args: argparse.Namespace) -> int:
    instance, order = _load_instance(args)
    graph = instance.graph
    ncomp = len(connected_components(graph))
    if order is None:
        if ncomp > 1:
            return _fail(
                f"graph has {ncomp} components: the oracle needs --order c0,c1,..."
            )
        order = (0,)
    grid = compute_epsilon(instance.all_bounds(), graph.n, "shift")
    try:
        expected = oracle_boundrep(
            graph, instance.lbounds, instance.ubounds, order, eps=grid
        )
        result = solve_boundrep_prescribed(instance, order, mode="shift", eps=grid)
    except NotProperIntervalError as exc:
        print(str(exc))
        return NEGATIVE
    got = result.ell if result.feasible else None
    if got != expected:
        print("solver disagrees with brute-force oracle", file=sys.stderr)
        print(f"oracle: {expected}", file=sys.stderr)
        print(f"solver: {got}", file=sys.stderr)
        return MISMATCH
    if got is None:
        print("infeasible (oracle confirms)")
        return NEGATIVE
    print("# oracle confirms")
    _print_solution(result, grid=args.grid)
    return OK


# ---------------------------------------------------------------------------
# gadget generation
# ---------------------------------------------------------------------------


def cmd_gen_gadget(args: argparse.Namespace) -> int:
    sizes = [int(t) for t in args.sizes.split(",")]
    instance, meta = gen_gadget(args.k, args.m, sizes)
    graph_path = Path(f"{args.out}.graph")
    bounds_path = Path(f"{args.out}.bounds")
    graph_path.write_text(tio.format_graph(instance.graph), encoding="utf-8")
    bounds_path.write_text(
        tio.format_bounds(instance.lbounds, instance.ubounds), encoding="utf-8"
    )
    print(f"wrote {graph_path} ({instance.graph.n} vertices, {instance.graph.m} edges)")
    print(f"wrote {bounds_path}")
    print(
        f"# anchors {' '.join(str(v) for v in meta.anchors)} "
        f"at multiples of {meta.gap}"
    )
    if not args.solve:
        return OK
    result = solve_boundrep(instance, mode="shift")
    if not result.feasible:
        print("no valid partition (instance infeasible)")
        return NEGATIVE
    try:
        triples = decode_partition(meta, result.ell)
    except DecodeError as exc:  # pragma: no cover - guarded by the reduction
        print(f"error: feasible but undecodable: {exc}", file=sys.stderr)
        return MISMATCH
    print("# component order " + " ".join(str(c) for c in result.comp_order))
    for triple in triples:
        print("partition " + " ".join(str(t) for t in triple))
    return OK


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(t) for t in args.sizes.split(",")]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "left_shifts", "long_events", "wall_seconds"])
    for n in sizes:
        instance = bench_instance(n, args.seed)
        t0 = time.perf_counter()
        result = solve_boundrep_prescribed(instance, (0,), mode="shift")
        wall = time.perf_counter() - t0
        if not result.feasible:  # pragma: no cover - bench instances are feasible
            print(f"error: bench instance n={n} infeasible", file=sys.stderr)
            return MISMATCH
        report = check_valid(
            result.ell,
            instance.graph,
            instance.lbounds,
            instance.ubounds,
            eps=result.eps,
        )
        if not report.ok:  # pragma: no cover - defensive
            print(
                f"error: bench solution n={n} invalid: {report.failures}",
                file=sys.stderr,
            )
            return MISMATCH
        writer.writerow(
            [n, result.stats.left_shifts, result.stats.long_events, f"{wall:.3f}"]
        )
    return OK


# ---------------------------------------------------------------------------
# trace
# ---------------------------------------------------------------------------

_PHASES = {0: "setup", 1: "descent", 2: "settle"}


def _trace_csv(result: SolveResult) -> str:
    lines = ["step,phase,vertex,old,new,fixed"]
    for ev in result.trace or []:
        old = "" if ev.old is None else str(ev.old)
        lines.append(
            f"{ev.step},{_PHASES[ev.phase]},{ev.vertex},{old},{ev.new},{int(ev.fixed)}"
        )
    return "\n".join(lines) + "\n"


def _trace_svg(result: SolveResult) -> str:
    events = result.trace or []
    if not events:
        return "<svg xmlns='http://www.w3.org/2000/svg' width='200' height='40'></svg>\n"
    vertices = sorted({ev.vertex for ev in events})
    row = {v: i for i, v in enumerate(vertices)}
    steps = max(ev.step for ev in events) + 1
    dx = max(2, min(12, 1600 // steps))
    dy, mx, my = 14, 60, 20
    width = mx + steps * dx + 20
    height = my + len(vertices) * dy + 20
    colors = {0: "#888888", 1: "#c0392b", 2: "#2980b9"}
    parts = [
        f"<svg xmlns='http://www.w3.org/2000/svg' width='{width}' height='{height}'>",
        "<style>text{font:10px monospace}</style>",
    ]
    for v in vertices:
        y = my + row[v] * dy
        parts.append(f"<text x='4' y='{y + 4}'>v{v}</text>")
        parts.append(
            f"<line x1='{mx}' y1='{y}' x2='{width - 10}' y2='{y}' "
            "stroke='#eeeeee' stroke-width='1'/>"
        )
    for ev in events:
        x = mx + ev.step * dx
        y = my + row[ev.vertex] * dy
        r = 4 if ev.fixed else 2
        parts.append(
            f"<circle cx='{x}' cy='{y}' r='{r}' fill='{colors[ev.phase]}'/>"
        )
    parts.append(
        f"<text x='{mx}' y='12'>grey setup / red descent / blue settle; "
        "large dot = value fixed</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_trace(args: argparse.Namespace) -> int:
    instance, order = _load_instance(args)
    ncomp = len(connected_components(instance.graph))
    if order is None:
        if ncomp > 1:
            return _fail(f"graph has {ncomp} components: give --order c0,c1,...")
        order = (0,)
    try:
        result = solve_boundrep_prescribed(
            instance, order, mode="shift", want_trace=True
        )
    except NotProperIntervalError as exc:
        print(str(exc))
        return NEGATIVE
    if not result.feasible:
        return _print_infeasible(result)
    text = _trace_svg(result) if args.format == "svg" else _trace_csv(result)
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out} ({len(result.trace or [])} events)")
    return OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intrep",
        description="Proper/unit interval representations under position constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="proper interval recognition + ordering")
    p.add_argument("graph")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("boundrep", help="bounded unit representation")
    p.add_argument("graph")
    p.add_argument("bounds", nargs="?")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--order", help="component order, e.g. 1,0,2")
    g.add_argument("--fpt", action="store_true", help="search the component order")
    p.add_argument("--mode", choices=["lp", "shift", "both"], default="shift")
    p.add_argument("--full", action="store_true", help="disable reduced constraint set")
    p.add_argument("--grid", action="store_true", help="print the grid step used")
    p.set_defaults(func=cmd_boundrep)

    p = sub.add_parser("extend-proper", help="extend pre-drawn proper intervals")
    p.add_argument("graph")
    p.add_argument("partial")
    p.set_defaults(func=cmd_extend_proper)

    p = sub.add_parser("extend-unit", help="extend pre-drawn unit intervals")
    p.add_argument("graph")
    p.add_argument("partial")
    p.add_argument("--mode", choices=["lp", "shift"], default="shift")
    p.set_defaults(func=cmd_extend_unit)

    p = sub.add_parser("oracle", help="brute-force cross-check (tiny instances)")
    p.add_argument("graph")
    p.add_argument("bounds", nargs="?")
    p.add_argument("--order", help="component order, e.g. 1,0,2")
    p.add_argument("--grid", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen-gadget", help="3-Partition hardness instance")
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    p.add_argument("sizes", help="3k sizes, e.g. 2,2,2,2,3,3")
    p.add_argument("--out", default="gadget", help="output file prefix")
    p.add_argument("--solve", action="store_true", help="also solve and decode")
    p.set_defaults(func=cmd_gen_gadget)

    p = sub.add_parser("bench", help="shifting-engine benchmark (CSV)")
    p.add_argument("--sizes", default="250,500,1000,2000")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("trace", help="dump shifting-engine events")
    p.add_argument("graph")
    p.add_argument("bounds", nargs="?")
    p.add_argument("--order", help="component order, e.g. 1,0,2")
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(func=cmd_trace)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        return _fail(str(exc))
    except tio.InputFormatError as exc:
        return _fail(str(exc))
    except InvalidPartialError as exc:
        return _fail(f"invalid pre-drawn intervals: {exc}")
    except InvalidThreePartitionError as exc:
        return _fail(f"invalid 3-Partition input: {exc}")
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
