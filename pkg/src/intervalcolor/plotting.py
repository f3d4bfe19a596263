"""Figures for the CLI's report path: colored drawings and verification tallies.

Uses the object-oriented matplotlib API with the Agg canvas so nothing
depends on a display or on pyplot's global state.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from matplotlib import colormaps
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .coloring import EdgeColoring
from .enumerator import EnumerationReport
from .multigraph import Multigraph


def _save(fig: Figure, path: str | Path) -> Path:
    path = Path(path)
    FigureCanvasAgg(fig)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    return path


def circle_layout(n: int) -> np.ndarray:
    angles = np.pi / 2 - 2 * np.pi * np.arange(n) / max(n, 1)
    return np.column_stack([np.cos(angles), np.sin(angles)])


def draw_coloring(
    G: Multigraph, coloring: EdgeColoring | None, path: str | Path, title: str = ""
) -> Path:
    """Draw ``G`` on a circle; parallel edges bow apart, colors label the edges."""
    pos = circle_layout(G.vertex_count)
    fig = Figure(figsize=(4.5, 4.5))
    ax = fig.add_subplot()
    cmap = colormaps["viridis"]
    t = coloring.t if coloring is not None else 1
    seen: dict[frozenset[int], int] = {}
    for e, (u, v) in enumerate(G.edges):
        key = frozenset((u, v))
        k = seen.get(key, 0)
        seen[key] = k + 1
        total = G.multiplicity(u, v)
        bow = (k - (total - 1) / 2) * 0.25
        a, b = pos[u], pos[v]
        mid = (a + b) / 2
        normal = np.array([a[1] - b[1], b[0] - a[0]])
        ctrl = mid + bow * normal
        s = np.linspace(0, 1, 30)[:, None]
        curve = (1 - s) ** 2 * a + 2 * (1 - s) * s * ctrl + s**2 * b
        if coloring is None:
            col, label = "0.3", f"e{e}"
        else:
            c = coloring.colors[e]
            col = cmap((c - 1) / max(t - 1, 1) * 0.85)
            label = str(c)
        ax.plot(curve[:, 0], curve[:, 1], color=col, lw=2, zorder=1)
        apex = 0.25 * a + 0.5 * ctrl + 0.25 * b
        ax.text(apex[0], apex[1], label, fontsize=8, ha="center", va="center",
                bbox=dict(boxstyle="round,pad=0.15", fc="white", ec="none"), zorder=3)
    ax.scatter(pos[:, 0], pos[:, 1], s=260, c="white", edgecolors="black", zorder=2)
    for v, (x, y) in enumerate(pos):
        ax.text(x, y, str(v + 1), ha="center", va="center", fontsize=9, zorder=4)
    ax.set_aspect("equal")
    ax.axis("off")
    margin = 1.25
    ax.set_xlim(-margin, margin)
    ax.set_ylim(-margin, margin)
    if title:
        ax.set_title(title, fontsize=10)
    return _save(fig, path)


def plot_report(reports: dict[str, EnumerationReport], path: str | Path) -> Path:
    """Stacked horizontal bars (passed, failed, skipped, inconclusive) per tally."""
    rows = []
    for check, report in reports.items():
        for name, tally in sorted(report.tallies.items()):
            rows.append((f"{check}: {name}", tally))
    fig = Figure(figsize=(6.5, 0.45 * max(len(rows), 1) + 1.2))
    ax = fig.add_subplot()
    labels = [r[0] for r in rows]
    y = np.arange(len(rows))
    parts = [
        ("passed", [t.passed for _, t in rows], "#2a9d5c"),
        ("failed", [t.checked - t.passed for _, t in rows], "#d1495b"),
        ("skipped", [t.skipped for _, t in rows], "#b0b0b0"),
        ("inconclusive", [t.inconclusive for _, t in rows], "#edae49"),
    ]
    left = np.zeros(len(rows))
    for name, values, color in parts:
        values = np.asarray(values, dtype=float)
        ax.barh(y, values, left=left, color=color, label=name, height=0.6)
        left += values
    ax.set_yticks(y, labels, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("cases")
    top = left.max(initial=1)
    ax.set_xlim(0, top * 1.05 if top else 1)
    if rows:
        ax.legend(fontsize=7, loc="lower right", ncols=2)
    ax.xaxis.get_major_locator().set_params(integer=True)
    ax.set_title(f"{sum(len(r.counterexamples) for r in reports.values())} counterexamples",
                 fontsize=10)
    return _save(fig, path)

