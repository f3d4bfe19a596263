"""Text format for multigraphs and optional colorings.

::

    # comment lines and blank lines are ignored anywhere
    multigraph <n> <m>
    e <u> <v>          (m lines, 1-based vertices, edge ids in file order)
    c <edge_id> <color> (optional, one per edge, 0-based edge ids)
"""

from __future__ import annotations

from pathlib import Path

from .coloring import EdgeColoring
from .errors import GraphError, ParseError
from .multigraph import Multigraph, build


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def loads(text: str) -> tuple[Multigraph, EdgeColoring | None]:
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    colors: dict[int, int] = {}
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        tokens = line.split()
        kind = tokens[0]
        if header is None:
            if kind != "multigraph" or len(tokens) != 3:
                raise ParseError("expected header 'multigraph <n> <m>'", lineno)
            n, m = _int(tokens[1], lineno), _int(tokens[2], lineno)
            if n < 1 or m < 0:
                raise ParseError(f"bad header counts n={n} m={m}", lineno)
            header = (n, m)
        elif kind == "e":
            if len(tokens) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            if colors:
                raise ParseError("edge line after coloring lines", lineno)
            if len(pairs) == header[1]:
                raise ParseError(f"more than the declared {header[1]} edges", lineno)
            u, v = _int(tokens[1], lineno), _int(tokens[2], lineno)
            if not (1 <= u <= header[0] and 1 <= v <= header[0]):
                raise ParseError(f"vertex out of range 1..{header[0]}", lineno)
            if u == v:
                raise ParseError(f"loop at vertex {u}", lineno)
            pairs.append((u - 1, v - 1))
        elif kind == "c":
            if len(tokens) != 3:
                raise ParseError("expected 'c <edge_id> <color>'", lineno)
            e, col = _int(tokens[1], lineno), _int(tokens[2], lineno)
            if not 0 <= e < header[1]:
                raise ParseError(f"colored edge id {e} out of range", lineno)
            if e in colors:
                raise ParseError(f"edge {e} colored twice", lineno)
            if col < 1:
                raise ParseError(f"color {col} must be positive", lineno)
            colors[e] = col
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if header is None:
        raise ParseError("missing 'multigraph' header", last or None)
    n, m = header
    if len(pairs) != m:
        raise ParseError(f"header declares {m} edges, found {len(pairs)}", last)
    if colors and len(colors) != m:
        raise ParseError(f"coloring covers {len(colors)} of {m} edges", last)
    try:
        G = build(n, pairs)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    coloring = EdgeColoring.from_colors([colors[e] for e in range(m)]) if colors else None
    return G, coloring


def dumps(G: Multigraph, coloring: EdgeColoring | None = None) -> str:
    lines = [f"multigraph {G.vertex_count} {G.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in G.edges]
    if coloring is not None:
        lines += [f"c {e} {c}" for e, c in enumerate(coloring.colors)]
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> tuple[Multigraph, EdgeColoring | None]:
    return loads(Path(path).read_text())


def dump(path: str | Path, G: Multigraph, coloring: EdgeColoring | None = None) -> None:
    Path(path).write_text(dumps(G, coloring))


def to_dot(G: Multigraph, coloring: EdgeColoring | None = None) -> str:
    """Graphviz text; with a coloring, every edge is labelled with its color."""
    lines = ["graph G {"]
    lines += [f"  v{v + 1};" for v in range(G.vertex_count)]
    for e, (u, v) in enumerate(G.edges):
        attrs = f'label="{coloring.colors[e]}"' if coloring is not None else f'label="e{e}"'
        lines.append(f"  v{u + 1} -- v{v + 1} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
