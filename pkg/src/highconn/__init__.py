"""Highly connected subgraphs: extraction, certificates and extremal constructions."""

from __future__ import annotations

__version__ = "0.1.0"

from .graph import Graph, build_basic, glue, induced_subgraph
from .connectivity import edge_connectivity, find_separator, vertex_connectivity
from .extraction import (
    BudgetExceeded,
    dense_extract,
    find_edge_connected_subgraph,
    find_vertex_connected_subgraph,
    peel,
    verify_trace,
)
from .packing import pack_spanning_trees

__all__ = [
    "Graph",
    "BudgetExceeded",
    "build_basic",
    "dense_extract",
    "edge_connectivity",
    "find_edge_connected_subgraph",
    "find_separator",
    "find_vertex_connected_subgraph",
    "glue",
    "induced_subgraph",
    "pack_spanning_trees",
    "peel",
    "vertex_connectivity",
    "verify_trace",
]
