"""Edge colorings and the checkers for proper and interval colorings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ColoringMismatch
from .multigraph import Multigraph

Spectrum = frozenset[int]


@dataclass(frozen=True)
class EdgeColoring:
    """Colors ``1..t``; ``colors[i]`` is the color of edge ``i``.

    The graph is not stored, so one coloring can be checked against several
    graphs sharing edge ids.
    """

    t: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"t must be positive, got {self.t}")
        for i, c in enumerate(self.colors):
            if not 1 <= c <= self.t:
                raise ValueError(f"edge {i} has color {c} outside 1..{self.t}")

    @classmethod
    def from_colors(cls, colors: Sequence[int], t: int | None = None) -> "EdgeColoring":
        colors = tuple(int(c) for c in colors)
        return cls(max(colors, default=1) if t is None else t, colors)

    def __getitem__(self, e: int) -> int:
        return self.colors[e]


def _check_domain(G: Multigraph, c: EdgeColoring) -> None:
    if len(c.colors) != G.edge_count:
        raise ColoringMismatch(
            f"coloring has {len(c.colors)} entries but the graph has {G.edge_count} edges"
        )


def spectrum(G: Multigraph, c: EdgeColoring, v: int) -> Spectrum:
    _check_domain(G, c)
    return frozenset(c.colors[e] for e in G.incident(v))


def is_proper(G: Multigraph, c: EdgeColoring) -> bool:
    _check_domain(G, c)
    return all(
        len(spectrum(G, c, v)) == len(G.incident(v)) for v in range(G.vertex_count)
    )


def is_interval(G: Multigraph, c: EdgeColoring) -> bool:
    """Proper, uses every color in ``1..t``, and every nonempty spectrum is contiguous."""
    _check_domain(G, c)
    if set(c.colors) != set(range(1, c.t + 1)):
        return False
    for v in range(G.vertex_count):
        ids = G.incident(v)
        if not ids:
            continue
        s = spectrum(G, c, v)
        # distinct colors plus span == degree means consecutive
        if len(s) != len(ids) or max(s) - min(s) + 1 != len(ids):
            return False
    return True


def odd_color_edge_count(G: Multigraph, c: EdgeColoring) -> int:
    """Number of edges whose color is odd."""
    _check_domain(G, c)
    return sum(1 for col in c.colors if col % 2 == 1)


def odd_colors_at(G: Multigraph, c: EdgeColoring, v: int) -> int:
    return sum(1 for col in spectrum(G, c, v) if col % 2 == 1)


def parity_internals_hold(G: Multigraph, c: EdgeColoring) -> bool:
    """For an interval coloring of an all-even-degree graph: each spectrum is
    half odd, and exactly half of the edges carry odd colors."""
    degrees = G.degrees()
    if any(d % 2 for d in degrees):
        raise ValueError("parity internals only apply when every degree is even")
    if any(2 * odd_colors_at(G, c, v) != d for v, d in enumerate(degrees)):
        return False
    return 2 * odd_color_edge_count(G, c) == G.edge_count
