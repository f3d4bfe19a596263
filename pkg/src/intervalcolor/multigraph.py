"""Loop-free multigraphs with stable edge ids, plus the three constructions.

Vertices are ``0..n-1`` and edge ``i`` is ``edges[i]``.  Parallel edges are
separate entries.  Values are immutable; every construction returns a new
graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import EdgeOutOfRange, LoopEdge, NotEulerian, NotSimple, VertexOutOfRange

Edge = tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[Edge, ...]
    _incidence: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise VertexOutOfRange(f"negative vertex count {n}")
        incidence: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise LoopEdge(f"edge {i} is a loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < n:
                    raise VertexOutOfRange(f"edge {i} endpoint {x} not in 0..{n - 1}")
            incidence[u].append(i)
            incidence[v].append(i)
        object.__setattr__(self, "_incidence", tuple(tuple(ids) for ids in incidence))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge ids incident to ``v``, ascending."""
        self._check_vertex(v)
        return self._incidence[v]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if u == v else u

    def degrees(self) -> list[int]:
        return [len(ids) for ids in self._incidence]

    def multiplicity(self, u: int, v: int) -> int:
        return sum(1 for e in self._incidence[u] if self.other_end(e, u) == v)

    def max_multiplicity(self) -> int:
        counts = Counter(frozenset(e) for e in self.edges)
        return max(counts.values(), default=0)

    def is_simple(self) -> bool:
        return self.max_multiplicity() <= 1

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.vertex_count - 1}")


@dataclass(frozen=True)
class EulerCertificate:
    """Closed trail given as a sequence of edge ids."""

    circuit: tuple[int, ...]


def build(vertex_count: int, endpoint_pairs: Iterable[Sequence[int]]) -> Multigraph:
    if vertex_count < 1:
        raise VertexOutOfRange("a multigraph needs at least one vertex")
    return Multigraph(vertex_count, tuple((int(u), int(v)) for u, v in endpoint_pairs))


def degree(G: Multigraph, v: int) -> int:
    return len(G.incident(v))


def max_degree(G: Multigraph) -> int:
    return max(G.degrees(), default=0)


def is_connected(G: Multigraph) -> bool:
    """Single-vertex graphs are connected; isolated vertices otherwise break it."""
    n = G.vertex_count
    if n <= 1:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    reached = 1
    while stack:
        v = stack.pop()
        for e in G.incident(v):
            w = G.other_end(e, v)
            if not seen[w]:
                seen[w] = True
                reached += 1
                stack.append(w)
    return reached == n


def is_eulerian(G: Multigraph) -> bool:
    # At least one edge is required; a lone vertex has no trail to speak of.
    return G.edge_count > 0 and all(d % 2 == 0 for d in G.degrees()) and is_connected(G)


def euler_circuit(G: Multigraph) -> EulerCertificate:
    """Hierholzer's algorithm; the walk starts at an endpoint of edge 0."""
    if not is_eulerian(G):
        raise NotEulerian("graph is not connected with all degrees even")
    used = [False] * G.edge_count
    pointer = [0] * G.vertex_count
    start = G.edges[0][0]
    # stack of (vertex, edge used to arrive there)
    stack: list[tuple[int, int]] = [(start, -1)]
    circuit: list[int] = []
    while stack:
        v, via = stack[-1]
        ids = G.incident(v)
        while pointer[v] < len(ids) and used[ids[pointer[v]]]:
            pointer[v] += 1
        if pointer[v] == len(ids):
            stack.pop()
            if via >= 0:
                circuit.append(via)
        else:
            e = ids[pointer[v]]
            used[e] = True
            stack.append((G.other_end(e, v), e))
    circuit.reverse()
    return EulerCertificate(tuple(circuit))


def is_valid_circuit(G: Multigraph, cert: EulerCertificate) -> bool:
    """Check a certificate from scratch: every edge once, consecutive, closed."""
    trail = cert.circuit
    if sorted(trail) != list(range(G.edge_count)) or not trail:
        return False
    first = G.edges[trail[0]]
    # try both orientations of the first edge
    for start in first:
        v = start
        ok = True
        for e in trail:
            a, b = G.edges[e]
            if v == a:
                v = b
            elif v == b:
                v = a
            else:
                ok = False
                break
        if ok and v == start:
            return True
    return False


def subdivide(G: Multigraph, e: int) -> Multigraph:
    """Replace edge ``e = (a, b)`` by ``(a, w)`` under id ``e`` and ``(w, b)`` under id ``m``."""
    if not 0 <= e < G.edge_count:
        raise EdgeOutOfRange(f"edge {e} not in 0..{G.edge_count - 1}")
    w = G.vertex_count
    a, b = G.edges[e]
    edges = list(G.edges)
    edges[e] = (a, w)
    edges.append((w, b))
    return Multigraph(w + 1, tuple(edges))


def star_augment(G: Multigraph) -> Multigraph:
    """Add a vertex ``u`` joined once to every odd-degree vertex.

    With no odd vertices ``u`` stays isolated.
    """
    u = G.vertex_count
    extra = tuple((v, u) for v, d in enumerate(G.degrees()) if d % 2 == 1)
    return Multigraph(u + 1, G.edges + extra)


def line_graph(G: Multigraph) -> Multigraph:
    if not G.is_simple():
        raise NotSimple("line graphs are defined here for simple graphs only")
    m = G.edge_count
    if m == 0:
        raise EdgeOutOfRange("the line graph of an edgeless graph has no vertices")
    pairs = []
    for i in range(m):
        ends = set(G.edges[i])
        for j in range(i + 1, m):
            if ends.intersection(G.edges[j]):
                pairs.append((i, j))
    return Multigraph(m, tuple(pairs))


# Small named graphs used by tests, examples and the CLI's built-in inputs.

def path(n: int) -> Multigraph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Multigraph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Multigraph:
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(k: int) -> Multigraph:
    return build(k + 1, [(0, i) for i in range(1, k + 1)])

