"""Brute-force reference decision for interval colorability.

Enumerates every assignment of colors ``1..t`` to the edges for every
``t = 1..|E|`` and filters them with vectorized checks.  It shares nothing
with :mod:`intervalcolor.solver` and exists only to cross-check it on small
graphs; cost is ``sum(t ** m)``.
"""

from __future__ import annotations

import numpy as np

from .multigraph import Multigraph

MAX_ORACLE_EDGES = 7


def _assignments(m: int, t: int) -> np.ndarray:
    digits = np.unravel_index(np.arange(t**m), (t,) * m)
    return (np.stack(digits, axis=1) + 1).astype(np.int8)


def interval_mask(G: Multigraph, table: np.ndarray, t: int) -> np.ndarray:
    """Rows of ``table`` (one coloring per row) that are interval ``t``-colorings."""
    ok = np.ones(len(table), dtype=bool)
    for c in range(1, t + 1):
        ok &= (table == c).any(axis=1)
    for v in range(G.vertex_count):
        ids = list(G.incident(v))
        if not ids:
            continue
        local = np.sort(table[:, ids], axis=1)
        if len(ids) > 1:
            ok &= (np.diff(local, axis=1) != 0).all(axis=1)
        ok &= (local[:, -1] - local[:, 0] + 1) == len(ids)
    return ok


def interval_colorings(G: Multigraph, t: int) -> np.ndarray:
    """Every interval ``t``-coloring of ``G``, one per row, colors in edge-id order."""
    table = _assignments(G.edge_count, t)
    return table[interval_mask(G, table, t)]


def oracle_colorable(G: Multigraph) -> bool:
    m = G.edge_count
    if m > MAX_ORACLE_EDGES:
        raise ValueError(f"oracle limited to {MAX_ORACLE_EDGES} edges, got {m}")
    return any(len(interval_colorings(G, t)) for t in range(1, m + 1))
