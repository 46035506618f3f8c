"""Outer automorphism groups of right-angled Artin groups, from the graph."""

from .graph_core import Graph, GraphError, VertexSet, parse_graph, serialize_graph
from .preorder import dominates, equivalence_classes
from .words import Word, parse_word

__all__ = [
    "Graph",
    "GraphError",
    "VertexSet",
    "Word",
    "dominates",
    "equivalence_classes",
    "parse_graph",
    "parse_word",
    "serialize_graph",
]

__version__ = "0.1.0"
