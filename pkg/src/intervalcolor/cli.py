"""Command-line front end.

Exit statuses: 0 success / colorable, 1 proven not colorable or a
verification counterexample, 2 bad input, 3 inconclusive under the node budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path
from typing import Sequence

from . import graphfile
from .coloring import EdgeColoring
from .enumerator import (
    CHECKS,
    EnumerationBounds,
    EnumerationReport,
    enumerate_multigraphs,
    run_check,
    verify_corollary2,
)
from .errors import GraphError, Inconclusive, WitnessMismatch
from .multigraph import (
    Multigraph,
    is_connected,
    is_eulerian,
    line_graph,
    max_degree,
    star_augment,
    subdivide,
)
from .solver import (
    DEFAULT_BUDGET,
    NodeCounter,
    Reason,
    Verdict,
    find_interval_coloring,
    is_interval_colorable,
    optimal_proper_coloring,
    parity_precheck,
)

BUDGET_ENV = "INTERVALCOLOR_BUDGET"

EXIT_OK, EXIT_NOT_COLORABLE, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

CHECK_NAMES = ("theorem2", "cor1", "cor2", "cor3", "cor4", "theorem1", "oracle")
# "all" leaves out the oracle: it is exponential in the edge count
ALL_CHECKS = ("theorem2", "cor1", "cor2", "cor3", "cor4", "theorem1")


def default_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_BUDGET


def graph_summary(G: Multigraph) -> dict:
    return {
        "n": G.vertex_count,
        "m": G.edge_count,
        "delta": max_degree(G),
        "eulerian": is_eulerian(G),
        "connected": is_connected(G),
    }


def witness_rows(G: Multigraph, coloring: EdgeColoring) -> list[dict]:
    return [
        {"edge_id": e, "u": u + 1, "v": v + 1, "color": coloring.colors[e]}
        for e, (u, v) in enumerate(G.edges)
    ]


def verdict_name(verdict: Verdict) -> str:
    if verdict.colorable:
        return "colorable"
    if verdict.reason is Reason.PARITY_THEOREM:
        return "not_colorable_parity"
    return "not_colorable_exhausted"


def emit(doc: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    for key, value in doc.items():
        if key == "witness":
            if value:
                out.write("witness:\n")
                for row in value:
                    out.write(f"  edge {row['edge_id']} ({row['u']},{row['v']}) -> {row['color']}\n")
        elif isinstance(value, dict):
            inner = " ".join(f"{k}={json.dumps(v)}" for k, v in value.items())
            out.write(f"{key}: {inner}\n")
        elif value is not None:
            out.write(f"{key}: {value}\n")


def _elapsed(start: float, timing: bool) -> float | None:
    return round((time.perf_counter() - start) * 1000, 3) if timing else None


def cmd_check(args: argparse.Namespace) -> int:
    G, _ = graphfile.load(args.path)
    precheck = parity_precheck(G)
    doc = {
        "command": "check",
        "input": str(args.path),
        "graph": graph_summary(G),
        "degrees": G.degrees(),
        "edge_parity": "odd" if G.edge_count % 2 else "even",
        "verdict": verdict_name(precheck) if precheck else None,
    }
    emit(doc, args.format)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    G, _ = graphfile.load(args.path)
    budget = args.budget if args.budget is not None else default_budget()
    start = time.perf_counter()
    doc = {
        "command": "solve",
        "input": str(args.path),
        "graph": graph_summary(G),
        "t": args.t,
        "verdict": None,
        "witness": [],
        "nodes_explored": 0,
        "elapsed_ms": None,
    }
    if G.edge_count == 0:
        raise GraphError("graph has no edges")
    try:
        if args.t is not None:
            verdict = None if args.no_precheck else parity_precheck(G)
            if verdict is None:
                counter = NodeCounter(budget)
                witness = find_interval_coloring(G, args.t, counter=counter)
                reason = None if witness else Reason.EXHAUSTED_SEARCH
                verdict = Verdict(witness, reason, counter.nodes)
        else:
            verdict = is_interval_colorable(G, budget=budget, use_precheck=not args.no_precheck)
    except Inconclusive as exc:
        doc.update(verdict="inconclusive", nodes_explored=exc.nodes,
                   elapsed_ms=_elapsed(start, args.timing))
        emit(doc, args.format)
        return EXIT_INCONCLUSIVE
    doc["verdict"] = verdict_name(verdict)
    doc["nodes_explored"] = verdict.nodes_explored
    if verdict.witness is not None:
        doc["t"] = verdict.witness.t
        doc["witness"] = witness_rows(G, verdict.witness)
        if args.witness_out:
            graphfile.dump(args.witness_out, G, verdict.witness)
    if args.figure:
        from .plotting import draw_coloring

        draw_coloring(G, verdict.witness, args.figure, title=doc["verdict"])
    doc["elapsed_ms"] = _elapsed(start, args.timing)
    emit(doc, args.format)
    return EXIT_OK if verdict.colorable else EXIT_NOT_COLORABLE


def cmd_chi(args: argparse.Namespace) -> int:
    G, _ = graphfile.load(args.path)
    start = time.perf_counter()
    budget = args.budget if args.budget is not None else default_budget()
    try:
        coloring = optimal_proper_coloring(G, budget=budget)
    except Inconclusive as exc:
        emit({"command": "chi", "input": str(args.path), "graph": graph_summary(G),
              "verdict": "inconclusive", "nodes_explored": exc.nodes}, args.format)
        return EXIT_INCONCLUSIVE
    doc = {
        "command": "chi",
        "input": str(args.path),
        "graph": graph_summary(G),
        "chromatic_index": coloring.t,
        "class": 1 if coloring.t == max_degree(G) else 2,
        "witness": witness_rows(G, coloring),
        "elapsed_ms": _elapsed(start, args.timing),
    }
    emit(doc, args.format)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    G, _ = graphfile.load(args.path)
    if args.kind == "subdivide":
        if args.edge is None:
            raise GraphError("subdivide needs --edge")
        H = subdivide(G, args.edge)
    elif args.kind == "star":
        H = star_augment(G)
    else:
        H = line_graph(G)
    text = graphfile.dumps(H)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    G, coloring = graphfile.load(args.path)
    if args.witness:
        W, coloring = graphfile.load(args.witness)
        if W != G:
            raise WitnessMismatch(f"{args.witness} describes a different graph")
        if coloring is None:
            raise WitnessMismatch(f"{args.witness} carries no 'c' lines")
    text = graphfile.to_dot(G, coloring)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    bounds = EnumerationBounds(args.max_n, args.max_m, args.max_mult, filters=frozenset())
    names = ALL_CHECKS if args.check == "all" else (args.check,)
    budget = args.budget if args.budget is not None else default_budget()
    reports: dict[str, EnumerationReport] = {}
    for name in names:
        if name == "cor2":
            reports[name] = verify_corollary2(budget=budget)
            continue
        graphs = list(enumerate_multigraphs(bounds.with_filters(*CHECKS[name][1])))
        total = len(graphs)

        def progress(done: int, name: str = name) -> None:
            if not args.quiet:
                print(f"[{name}] {done}/{total} graphs", file=sys.stderr)

        reports[name] = run_check(name, graphs, budget=budget, jobs=args.jobs, progress=progress)
    ok = all(r.ok for r in reports.values())
    doc = {
        "command": "verify",
        "bounds": {"max_n": args.max_n, "max_m": args.max_m, "max_mult": args.max_mult},
        "checks": {name: r.to_dict() for name, r in reports.items()},
        "ok": ok,
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        for name, r in reports.items():
            print(f"== {name}: {r.graphs_examined} graphs examined")
            for tally_name, t in sorted(r.tallies.items()):
                print(f"  {tally_name}: checked={t.checked} passed={t.passed} "
                      f"skipped={t.skipped} inconclusive={t.inconclusive}")
            for note in r.observations:
                print(f"  {note}")
            for cx in r.counterexamples:
                print(f"  COUNTEREXAMPLE [{cx.check}] {cx.details}")
                print("    " + cx.graph.rstrip().replace("\n", "\n    "))
        print("PASS" if ok else "FAIL")
    if args.figure:
        from .plotting import plot_report

        plot_report(reports, args.figure)
    if any(r.counterexamples for r in reports.values()):
        return EXIT_NOT_COLORABLE
    if not ok:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intervalcolor", description="Interval edge-colorings of multigraphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    def add_budget(p: argparse.ArgumentParser) -> None:
        p.add_argument("--budget", type=int, default=None,
                       help=f"search-node cap (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")

    p = sub.add_parser("check", help="structure report and parity shortcut")
    p.add_argument("path")
    add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="decide interval colorability")
    p.add_argument("path")
    p.add_argument("--t", type=int, default=None, help="search a single number of colors")
    p.add_argument("--no-precheck", action="store_true",
                   help="skip the parity shortcut and search exhaustively")
    p.add_argument("--witness-out", help="write graph plus coloring to this file")
    p.add_argument("--figure", help="render the graph (and witness) to an image file")
    p.add_argument("--timing", action="store_true", help="fill elapsed_ms")
    add_budget(p)
    add_format(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("chi", help="chromatic index with a witness")
    p.add_argument("path")
    p.add_argument("--timing", action="store_true")
    add_budget(p)
    add_format(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("construct", help="subdivide an edge, star-augment, or take the line graph")
    p.add_argument("kind", choices=("subdivide", "star", "line"))
    p.add_argument("path")
    p.add_argument("--edge", type=int, help="edge id (0-based) for subdivide")
    p.add_argument("--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the parity results over all small multigraphs")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-m", type=int, default=7)
    p.add_argument("--max-mult", type=int, default=2)
    p.add_argument("--check", choices=CHECK_NAMES + ("all",), default="all")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--figure", help="render the tallies to an image file")
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")
    add_budget(p)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="Graphviz text, edge labels from a witness")
    p.add_argument("path")
    p.add_argument("--witness", help="graph file carrying 'c' lines for the same graph")
    p.add_argument("--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
