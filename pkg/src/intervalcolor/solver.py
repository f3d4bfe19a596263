"""Exact search for interval colorings and for the chromatic index.

Both searches are plain backtracking over edges in a fixed order that grows
the colored part of the graph through shared vertices.  Colors at a vertex
are kept as a bitmask together with the running min/max, so the interval
condition prunes locally: once a vertex has seen colors ``lo..hi`` its
remaining edges must land in ``[hi - d + 1, lo + d - 1]``.

A ``budget`` caps the number of search nodes; running out raises
:class:`Inconclusive`, never a negative answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .coloring import EdgeColoring, is_interval, is_proper
from .errors import EmptyGraph, Inconclusive, NotRegular
from .multigraph import Multigraph, is_eulerian, max_degree

DEFAULT_BUDGET = 50_000_000


class Reason(str, Enum):
    PARITY_THEOREM = "parity"
    EXHAUSTED_SEARCH = "exhausted"


@dataclass(frozen=True)
class Verdict:
    witness: EdgeColoring | None = None
    reason: Reason | None = None
    nodes_explored: int = 0

    @property
    def colorable(self) -> bool:
        return self.witness is not None


class NodeCounter:
    """Search-node tally shared across several searches, with an optional cap."""

    def __init__(self, budget: int | None = None):
        self.budget = budget
        self.nodes = 0

    def charge(self, k: int = 1) -> None:
        self.nodes += k
        if self.budget is not None and self.nodes > self.budget:
            raise Inconclusive(self.nodes, self.budget)


def _require_edges(G: Multigraph) -> None:
    if G.edge_count == 0:
        raise EmptyGraph("graph has no edges")


def search_order(G: Multigraph) -> list[int]:
    """Edge order for the searches: prefer edges touching already-ordered
    vertices (both ends first), ties broken by smallest id."""
    m = G.edge_count
    touched = [0] * G.vertex_count
    placed = [False] * m
    order = []
    for _ in range(m):
        best, best_score = -1, -1
        for e in range(m):
            if placed[e]:
                continue
            u, v = G.edges[e]
            score = touched[u] + touched[v]
            if score > best_score:
                best, best_score = e, score
                if score == 2:
                    break
        placed[best] = True
        order.append(best)
        u, v = G.edges[best]
        touched[u] = touched[v] = 1
    return order


def parity_precheck(G: Multigraph) -> Verdict | None:
    """An Eulerian multigraph with an odd number of edges has no interval coloring."""
    if is_eulerian(G) and G.edge_count % 2 == 1:
        return Verdict(reason=Reason.PARITY_THEOREM)
    return None


def _interval_search(G: Multigraph, t: int, counter: NodeCounter) -> EdgeColoring | None:
    m = G.edge_count
    deg = G.degrees()
    if max(deg) > t or m < t:
        return None
    order = search_order(G)
    ends = [G.edges[e] for e in order]
    n = G.vertex_count
    used = [0] * n
    lo = [0] * n
    hi = [0] * n
    seen = [0] * (t + 1)
    unused = t
    full = ((1 << t) - 1) << 1
    # reversing colors (c -> t + 1 - c) maps interval colorings to interval
    # colorings, so the first edge may stay in the lower half
    first_mask = ((1 << ((t + 1) // 2)) - 1) << 1
    picked = [0] * m

    def window(v: int) -> int:
        if not used[v]:
            return full
        d = deg[v]
        a = max(1, hi[v] - d + 1)
        b = min(t, lo[v] + d - 1)
        return (((1 << (b - a + 1)) - 1) << a) & ~used[v]

    def extend(i: int) -> bool:
        nonlocal unused
        if i == m:
            return True
        a, b = ends[i]
        allowed = window(a) & window(b)
        if i == 0:
            allowed &= first_mask
        remaining = m - i - 1
        while allowed:
            bit = allowed & -allowed
            allowed ^= bit
            c = bit.bit_length() - 1
            fresh = seen[c] == 0
            if unused - fresh > remaining:
                continue
            counter.charge()
            saved = (used[a], lo[a], hi[a], used[b], lo[b], hi[b])
            for v in (a, b):
                if used[v]:
                    if c < lo[v]:
                        lo[v] = c
                    elif c > hi[v]:
                        hi[v] = c
                else:
                    lo[v] = hi[v] = c
                used[v] |= bit
            seen[c] += 1
            unused -= fresh
            picked[i] = c
            if extend(i + 1):
                return True
            seen[c] -= 1
            unused += fresh
            used[a], lo[a], hi[a], used[b], lo[b], hi[b] = saved
        return False

    if not extend(0):
        return None
    colors = [0] * m
    for i, e in enumerate(order):
        colors[e] = picked[i]
    return EdgeColoring(t, tuple(colors))


def find_interval_coloring(
    G: Multigraph, t: int, *, budget: int | None = None, counter: NodeCounter | None = None
) -> EdgeColoring | None:
    """An interval ``t``-coloring of ``G``, or ``None`` if none exists."""
    _require_edges(G)
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    counter = counter or NodeCounter(budget)
    witness = _interval_search(G, t, counter)
    assert witness is None or is_interval(G, witness)
    return witness


def is_interval_colorable(
    G: Multigraph, *, budget: int | None = None, use_precheck: bool = True
) -> Verdict:
    """Decide membership in the class of interval colorable multigraphs.

    Tries ``t = max degree .. |E|``; outside that range no interval coloring
    can exist (properness forces ``t >= max degree`` and every color needs an
    edge).
    """
    _require_edges(G)
    if use_precheck:
        verdict = parity_precheck(G)
        if verdict is not None:
            return verdict
    counter = NodeCounter(budget)
    for t in range(max_degree(G), G.edge_count + 1):
        witness = find_interval_coloring(G, t, counter=counter)
        if witness is not None:
            return Verdict(witness=witness, nodes_explored=counter.nodes)
    return Verdict(reason=Reason.EXHAUSTED_SEARCH, nodes_explored=counter.nodes)


def _proper_search(G: Multigraph, k: int, counter: NodeCounter) -> EdgeColoring | None:
    m = G.edge_count
    order = search_order(G)
    ends = [G.edges[e] for e in order]
    used = [0] * G.vertex_count
    picked = [0] * m

    def extend(i: int, top: int) -> bool:
        if i == m:
            return True
        a, b = ends[i]
        blocked = used[a] | used[b]
        # colors are interchangeable: never open more than one new color
        for c in range(1, min(k, top + 1) + 1):
            bit = 1 << c
            if blocked & bit:
                continue
            counter.charge()
            used[a] |= bit
            used[b] |= bit
            picked[i] = c
            if extend(i + 1, max(top, c)):
                return True
            used[a] ^= bit
            used[b] ^= bit
        return False

    if not extend(0, 0):
        return None
    colors = [0] * m
    for i, e in enumerate(order):
        colors[e] = picked[i]
    return EdgeColoring(k, tuple(colors))


def optimal_proper_coloring(G: Multigraph, *, budget: int | None = None) -> EdgeColoring:
    """A proper edge coloring with the fewest colors, found by trying
    ``k = max degree, max degree + 1, ...``."""
    _require_edges(G)
    counter = NodeCounter(budget)
    # Vizing/Shannon guarantee success by max degree + max multiplicity;
    # the loop simply runs on to |E| if that ever failed.
    for k in range(max_degree(G), G.edge_count + 1):
        witness = _proper_search(G, k, counter)
        if witness is not None:
            assert is_proper(G, witness)
            return witness
    raise AssertionError("every graph has a proper coloring with |E| colors")


def chromatic_index(G: Multigraph, *, budget: int | None = None) -> int:
    return optimal_proper_coloring(G, budget=budget).t


def theorem1_necessary_check(G: Multigraph, *, budget: int | None = None) -> bool:
    """Interval colorable implies chromatic index equals max degree."""
    if not is_interval_colorable(G, budget=budget).colorable:
        return True
    return chromatic_index(G, budget=budget) == max_degree(G)


def theorem1_regular_iff_check(G: Multigraph, *, budget: int | None = None) -> bool:
    """For regular G: interval colorable exactly when chromatic index equals max degree."""
    _require_edges(G)
    if not G.is_regular():
        raise NotRegular("degrees are not all equal")
    colorable = is_interval_colorable(G, budget=budget).colorable
    class_one = chromatic_index(G, budget=budget) == max_degree(G)
    return colorable == class_one
