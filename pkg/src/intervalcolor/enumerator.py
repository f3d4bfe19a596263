"""Exhaustive generation of small multigraphs and the verification harness.

Each ``verify_*`` function runs one of the parity results as a machine check
over every graph within the bounds and returns an :class:`EnumerationReport`.
A failed check stores the offending graph in graph-file format so it can be
replayed with the CLI.
"""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from . import graphfile
from .coloring import parity_internals_hold
from .errors import BoundsTooLarge, Inconclusive, TooLargeForCanonical
from .multigraph import (
    Multigraph,
    build,
    complete,
    cycle,
    is_connected,
    is_eulerian,
    line_graph,
    max_degree,
    star_augment,
    subdivide,
)
from .oracle import oracle_colorable
from .solver import Verdict, chromatic_index, is_interval_colorable, parity_precheck

FILTERS = frozenset({"connected", "eulerian", "regular", "simple"})
CANONICAL_CAP = 8
LABEL_SPACE_CAP = 50_000_000


@dataclass(frozen=True)
class EnumerationBounds:
    max_vertices: int
    max_edges: int
    max_multiplicity: int = 1
    filters: frozenset[str] = frozenset({"connected"})
    dedup: bool = True

    def __post_init__(self) -> None:
        if min(self.max_vertices, self.max_edges, self.max_multiplicity) < 1:
            raise ValueError("bounds must all be at least 1")
        object.__setattr__(self, "filters", frozenset(self.filters))
        unknown = self.filters - FILTERS
        if unknown:
            raise ValueError(f"unknown filters: {sorted(unknown)}")

    def with_filters(self, *names: str) -> "EnumerationBounds":
        return replace(self, filters=self.filters | set(names))

    @property
    def multiplicity_cap(self) -> int:
        return 1 if "simple" in self.filters else self.max_multiplicity

    @property
    def needs_connected(self) -> bool:
        return bool(self.filters & {"connected", "eulerian"})


# canonical labelling ------------------------------------------------------


@lru_cache(maxsize=None)
def _permutation_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)
    rows, cols = np.triu_indices(n, k=1)
    return perms[:, rows], perms[:, cols]


def multiplicity_matrix(G: Multigraph) -> np.ndarray:
    M = np.zeros((G.vertex_count, G.vertex_count), dtype=np.int64)
    for u, v in G.edges:
        M[u, v] += 1
        M[v, u] += 1
    return M


def canonical_code(G: Multigraph, cap: int = CANONICAL_CAP) -> bytes:
    """Lexicographically smallest upper-triangle multiplicity vector over all
    relabellings, prefixed by the vertex count.  Equal iff isomorphic."""
    n = G.vertex_count
    if n > cap:
        raise TooLargeForCanonical(f"{n} vertices exceeds the permutation cap {cap}")
    M = multiplicity_matrix(G)
    if M.max(initial=0) > 255:
        raise TooLargeForCanonical("edge multiplicity above 255")
    a, b = _permutation_index(n)
    table = M[a, b]  # one row per permutation
    for col in range(table.shape[1]):
        column = table[:, col]
        table = table[column == column.min()]
        if len(table) == 1:
            break
    return bytes([n]) + table[0].astype(np.uint8).tobytes()


def from_code(code: bytes) -> Multigraph:
    n = code[0]
    pairs = []
    for (u, v), mult in zip(itertools.combinations(range(n), 2), code[1:]):
        pairs += [(u, v)] * mult
    return build(n, pairs)


def is_isomorphic(G: Multigraph, H: Multigraph) -> bool:
    return canonical_code(G) == canonical_code(H)


# generation ---------------------------------------------------------------


def _vectors(slots: int, cap: int, total: int) -> Iterator[tuple[int, ...]]:
    """Multiplicity vectors over ``slots`` pairs, entries ``<= cap``, sum ``<= total``,
    in lexicographic order."""
    if slots == 0:
        yield ()
        return
    for first in range(min(cap, total) + 1):
        for rest in _vectors(slots - 1, cap, total - first):
            yield (first,) + rest


def _count_vectors(slots: int, cap: int, total: int) -> int:
    ways = [1] + [0] * total  # ways[s]: vectors so far with sum s
    for _ in range(slots):
        ways = [sum(ways[s - k] for k in range(min(cap, s) + 1)) for s in range(total + 1)]
    return sum(ways)


def label_space(bounds: EnumerationBounds) -> int:
    cap = bounds.multiplicity_cap
    return sum(
        _count_vectors(n * (n - 1) // 2, cap, bounds.max_edges)
        for n in range(1, bounds.max_vertices + 1)
    )


def _passes(G: Multigraph, filters: frozenset[str]) -> bool:
    if G.edge_count == 0:
        return False
    if "simple" in filters and not G.is_simple():
        return False
    if "regular" in filters and not G.is_regular():
        return False
    if "eulerian" in filters:
        return is_eulerian(G)
    if "connected" in filters:
        return is_connected(G)
    return True


def _sweep(bounds: EnumerationBounds) -> Iterator[Multigraph]:
    cap = bounds.multiplicity_cap
    for n in range(1, bounds.max_vertices + 1):
        if bounds.needs_connected and n - 1 > bounds.max_edges:
            break
        pairs = list(itertools.combinations(range(n), 2))
        for vector in _vectors(len(pairs), cap, bounds.max_edges):
            edges = [p for p, k in zip(pairs, vector) for _ in range(k)]
            if not edges:
                continue
            G = build(n, edges)
            if _passes(G, bounds.filters):
                yield G


def _grow(bounds: EnumerationBounds) -> list[bytes]:
    """Canonical codes of every connected multigraph within the bounds.

    Deleting an edge on a cycle, or a leaf with its edge, keeps a connected
    multigraph connected, so adding one edge at a time from K2 reaches
    every isomorphism class.
    """
    cap = bounds.multiplicity_cap
    if bounds.max_vertices < 2:
        return []
    level = {canonical_code(build(2, [(0, 1)]))}
    found: list[bytes] = []
    for m in range(1, bounds.max_edges + 1):
        found.extend(level)
        if m == bounds.max_edges:
            break
        following: set[bytes] = set()
        for code in level:
            G = from_code(code)
            n = G.vertex_count
            for u, v in itertools.combinations(range(n), 2):
                if G.multiplicity(u, v) < cap:
                    following.add(canonical_code(build(n, G.edges + ((u, v),))))
            if n < bounds.max_vertices:
                for u in range(n):
                    following.add(canonical_code(build(n + 1, G.edges + ((u, n),))))
        level = following
    return found


def _sort_key(code: bytes) -> tuple[int, int, bytes]:
    return code[0], sum(code[1:]), code


def enumerate_multigraphs(
    bounds: EnumerationBounds, *, cap: int = LABEL_SPACE_CAP
) -> Iterator[Multigraph]:
    """Every multigraph (with at least one edge) within ``bounds`` passing its filters.

    With ``dedup`` one canonical representative per isomorphism class is
    yielded, ordered by vertex count, edge count, then canonical code.
    """
    space = label_space(bounds)
    if space > cap:
        raise BoundsTooLarge(f"label space of {space} graphs exceeds the cap {cap}")
    if not bounds.dedup:
        yield from _sweep(bounds)
        return
    if bounds.max_vertices > CANONICAL_CAP:
        raise BoundsTooLarge(f"dedup needs at most {CANONICAL_CAP} vertices")
    if bounds.needs_connected:
        codes = _grow(bounds)
    else:
        codes = {canonical_code(G) for G in _sweep(bounds)}
    for code in sorted(codes, key=_sort_key):
        G = from_code(code)
        if _passes(G, bounds.filters):
            yield G


# reports ------------------------------------------------------------------


@dataclass
class Tally:
    checked: int = 0
    passed: int = 0
    skipped: int = 0
    inconclusive: int = 0

    def merge(self, other: "Tally") -> None:
        self.checked += other.checked
        self.passed += other.passed
        self.skipped += other.skipped
        self.inconclusive += other.inconclusive


@dataclass
class Counterexample:
    check: str
    graph: str
    details: str = ""


@dataclass
class EnumerationReport:
    graphs_examined: int = 0
    tallies: dict[str, Tally] = field(default_factory=dict)
    counterexamples: list[Counterexample] = field(default_factory=list)
    inconclusive_graphs: list[str] = field(default_factory=list)
    observations: list[str] = field(default_factory=list)

    def tally(self, check: str) -> Tally:
        return self.tallies.setdefault(check, Tally())

    def record(self, check: str, ok: bool, G: Multigraph, details: str = "") -> bool:
        t = self.tally(check)
        t.checked += 1
        if ok:
            t.passed += 1
        else:
            self.counterexamples.append(Counterexample(check, graphfile.dumps(G), details))
        return ok

    def skip(self, check: str) -> None:
        self.tally(check).skipped += 1

    def merge(self, other: "EnumerationReport") -> None:
        self.graphs_examined += other.graphs_examined
        for name, t in other.tallies.items():
            self.tally(name).merge(t)
        self.counterexamples.extend(other.counterexamples)
        self.inconclusive_graphs.extend(other.inconclusive_graphs)
        self.observations.extend(other.observations)

    @property
    def inconclusive(self) -> int:
        return sum(t.inconclusive for t in self.tallies.values())

    @property
    def ok(self) -> bool:
        return not self.counterexamples and self.inconclusive == 0

    def to_dict(self) -> dict:
        return {
            "graphs_examined": self.graphs_examined,
            "tallies": {
                name: vars(t) for name, t in sorted(self.tallies.items())
            },
            "counterexamples": [vars(c) for c in self.counterexamples],
            "inconclusive_graphs": list(self.inconclusive_graphs),
            "observations": list(self.observations),
            "ok": self.ok,
        }


# per-graph checks ---------------------------------------------------------


def _solve(
    G: Multigraph, report: EnumerationReport, check: str, budget: int | None,
    use_precheck: bool = False,
) -> Verdict | None:
    """Decide ``G`` for ``check``; an exhausted budget is tallied, not judged.

    Every witness on an all-even-degree graph also gets its parity
    internals audited.
    """
    try:
        verdict = is_interval_colorable(G, budget=budget, use_precheck=use_precheck)
    except Inconclusive:
        report.tally(check).inconclusive += 1
        report.inconclusive_graphs.append(graphfile.dumps(G))
        return None
    if verdict.witness is not None and all(d % 2 == 0 for d in G.degrees()):
        report.record(
            "parity_internals", parity_internals_hold(G, verdict.witness), G,
            f"witness {list(verdict.witness.colors)}",
        )
    return verdict


def _check_theorem2(G: Multigraph, report: EnumerationReport, budget: int | None) -> None:
    if not is_eulerian(G) or G.edge_count % 2 == 0:
        return
    verdict = _solve(G, report, "theorem2", budget)
    if verdict is None:
        return
    details = "" if verdict.witness is None else f"witness {list(verdict.witness.colors)}"
    report.record("theorem2", not verdict.colorable, G, details)
    report.record(
        "theorem2_precheck",
        parity_precheck(G) is not None and not verdict.colorable,
        G,
        "precheck and exhaustive search disagree",
    )


def _check_corollary1(G: Multigraph, report: EnumerationReport, budget: int | None) -> None:
    if not is_eulerian(G):
        return
    verdict = _solve(G, report, "corollary1", budget)
    if verdict is None:
        return
    if verdict.colorable:
        report.record("corollary1", G.edge_count % 2 == 0, G, f"m={G.edge_count}")
    else:
        report.skip("corollary1")


def _check_corollary3(G: Multigraph, report: EnumerationReport, budget: int | None) -> None:
    if not is_eulerian(G):
        return
    verdict = _solve(G, report, "corollary3", budget)
    if verdict is None:
        return
    if not verdict.colorable:
        report.skip("corollary3")
        return
    for e in range(G.edge_count):
        H = subdivide(G, e)
        sub = _solve(H, report, "corollary3", budget)
        if sub is not None:
            details = f"subdividing edge {e}"
            if sub.witness is not None:
                details += f" gives witness {list(sub.witness.colors)}"
            report.record("corollary3", not sub.colorable, G, details)


def _check_corollary4(G: Multigraph, report: EnumerationReport, budget: int | None) -> None:
    if not is_connected(G) or G.edge_count % 2 == 0:
        return
    verdict = _solve(G, report, "corollary4", budget)
    if verdict is None:
        return
    if not verdict.colorable:
        report.skip("corollary4")
        return
    starred = _solve(star_augment(G), report, "corollary4", budget)
    if starred is not None:
        details = "" if starred.witness is None else f"G* witness {list(starred.witness.colors)}"
        report.record("corollary4", not starred.colorable, G, details)


def _check_theorem1(G: Multigraph, report: EnumerationReport, budget: int | None) -> None:
    verdict = _solve(G, report, "theorem1_necessary", budget, use_precheck=True)
    if verdict is None:
        return
    delta = max_degree(G)
    try:
        chi = chromatic_index(G, budget=budget)
    except Inconclusive:
        report.tally("theorem1_necessary").inconclusive += 1
        report.inconclusive_graphs.append(graphfile.dumps(G))
        return
    if verdict.colorable:
        report.record("theorem1_necessary", chi == delta, G, f"chi'={chi} delta={delta}")
    else:
        report.skip("theorem1_necessary")
    if G.is_regular():
        report.record(
            "theorem1_regular_iff", verdict.colorable == (chi == delta), G,
            f"colorable={verdict.colorable} chi'={chi} delta={delta}",
        )


def _check_oracle(G: Multigraph, report: EnumerationReport, budget: int | None) -> None:
    verdict = _solve(G, report, "oracle_agreement", budget, use_precheck=True)
    if verdict is None:
        return
    expected = oracle_colorable(G)
    report.record(
        "oracle_agreement", verdict.colorable == expected, G,
        f"solver={verdict.colorable} oracle={expected}",
    )


CHECKS: dict[str, tuple[Callable[[Multigraph, EnumerationReport, int | None], None], tuple[str, ...]]] = {
    "theorem2": (_check_theorem2, ("eulerian",)),
    "cor1": (_check_corollary1, ("eulerian",)),
    "cor3": (_check_corollary3, ("eulerian",)),
    "cor4": (_check_corollary4, ("connected",)),
    "theorem1": (_check_theorem1, ("connected",)),
    "oracle": (_check_oracle, ("connected",)),
}


def _run_chunk(args: tuple[str, list[Multigraph], int | None]) -> EnumerationReport:
    name, graphs, budget = args
    check = CHECKS[name][0]
    report = EnumerationReport()
    for G in graphs:
        report.graphs_examined += 1
        check(G, report, budget)
    return report


def run_check(
    name: str,
    graphs: Iterable[Multigraph],
    *,
    budget: int | None = None,
    jobs: int = 1,
    progress: Callable[[int], None] | None = None,
    chunk_size: int = 64,
) -> EnumerationReport:
    """Apply check ``name`` to every graph.  The report is identical for any
    ``jobs``: chunks are merged in input order."""
    graphs = list(graphs)
    chunks = [
        (name, graphs[i : i + chunk_size], budget) for i in range(0, len(graphs), chunk_size)
    ]
    report = EnumerationReport()
    if jobs > 1 and len(chunks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.imap(_run_chunk, chunks)
            for part in parts:
                report.merge(part)
                if progress:
                    progress(report.graphs_examined)
    else:
        for chunk in chunks:
            report.merge(_run_chunk(chunk))
            if progress:
                progress(report.graphs_examined)
    return report


def _verify(name: str, bounds: EnumerationBounds, **kwargs) -> EnumerationReport:
    graphs = enumerate_multigraphs(bounds.with_filters(*CHECKS[name][1]))
    return run_check(name, graphs, **kwargs)


def verify_theorem2(bounds: EnumerationBounds, **kwargs) -> EnumerationReport:
    """Eulerian with odd edge count: the exhaustive search, with the parity
    shortcut switched off, must find no interval coloring."""
    return _verify("theorem2", bounds, **kwargs)


def verify_corollary1(bounds: EnumerationBounds, **kwargs) -> EnumerationReport:
    return _verify("cor1", bounds, **kwargs)


def verify_corollary3(bounds: EnumerationBounds, **kwargs) -> EnumerationReport:
    """Every single-edge subdivision of an Eulerian interval colorable graph
    must fail to be interval colorable."""
    return _verify("cor3", bounds, **kwargs)


def verify_corollary4(bounds: EnumerationBounds, **kwargs) -> EnumerationReport:
    return _verify("cor4", bounds, **kwargs)


def verify_theorem1(bounds: EnumerationBounds, **kwargs) -> EnumerationReport:
    return _verify("theorem1", bounds, **kwargs)


def verify_oracle(bounds: EnumerationBounds, **kwargs) -> EnumerationReport:
    return _verify("oracle", bounds, **kwargs)


def default_regular_inputs() -> list[tuple[str, Multigraph]]:
    return [("C4", cycle(4)), ("K4", complete(4)), ("C6", cycle(6))]


def verify_corollary2(
    regular_inputs: Sequence[Multigraph | tuple[str, Multigraph]] | None = None,
    *,
    budget: int | None = None,
) -> EnumerationReport:
    """For connected simple r-regular G (r >= 2) with an even number of edges
    and an interval coloring: L(G) is Eulerian with an even number of edges,
    has chromatic index 2r - 2, and is interval colorable."""
    if regular_inputs is None:
        regular_inputs = default_regular_inputs()
    report = EnumerationReport()
    for index, item in enumerate(regular_inputs):
        name, G = item if isinstance(item, tuple) else (f"input {index}", item)
        report.graphs_examined += 1
        degrees = set(G.degrees())
        r = max_degree(G)
        eligible = (
            G.edge_count % 2 == 0 and G.is_simple() and len(degrees) == 1
            and r >= 2 and is_connected(G)
        )
        verdict = _solve(G, report, "corollary2", budget, use_precheck=True) if eligible else None
        if verdict is None or not verdict.colorable:
            report.skip("corollary2")
            report.observations.append(f"{name}: skipped (hypotheses not met or undecided)")
            continue
        L = line_graph(G)
        try:
            chi = chromatic_index(L, budget=budget)
        except Inconclusive:
            report.tally("theorem3").inconclusive += 1
            report.inconclusive_graphs.append(graphfile.dumps(L))
            continue
        report.record("theorem3", chi == 2 * r - 2, G, f"chi'(L)={chi}, expected {2 * r - 2}")
        line_verdict = _solve(L, report, "corollary2", budget, use_precheck=True)
        if line_verdict is None:
            continue
        ok = is_eulerian(L) and L.edge_count % 2 == 0 and line_verdict.colorable
        report.record(
            "corollary2", ok, G,
            f"L eulerian={is_eulerian(L)} m(L)={L.edge_count} colorable={line_verdict.colorable}",
        )
        report.observations.append(
            f"{name}: r={r} L has {L.vertex_count} vertices, {L.edge_count} edges, chi'(L)={chi}"
        )
    return report
