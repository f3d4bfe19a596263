"""Exact interval edge-coloring toolkit for small multigraphs."""

from .coloring import EdgeColoring, is_interval, is_proper, odd_color_edge_count, spectrum
from .errors import GraphError, Inconclusive
from .multigraph import (
    EulerCertificate,
    Multigraph,
    build,
    degree,
    euler_circuit,
    is_connected,
    is_eulerian,
    line_graph,
    max_degree,
    star_augment,
    subdivide,
)
from .solver import (
    Reason,
    Verdict,
    chromatic_index,
    find_interval_coloring,
    is_interval_colorable,
    parity_precheck,
)

__all__ = [
    "EdgeColoring",
    "EulerCertificate",
    "GraphError",
    "Inconclusive",
    "Multigraph",
    "Reason",
    "Verdict",
    "build",
    "chromatic_index",
    "degree",
    "euler_circuit",
    "find_interval_coloring",
    "is_connected",
    "is_eulerian",
    "is_interval",
    "is_interval_colorable",
    "is_proper",
    "line_graph",
    "max_degree",
    "odd_color_edge_count",
    "parity_precheck",
    "spectrum",
    "star_augment",
    "subdivide",
]
