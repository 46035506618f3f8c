"""All graphs on a few vertices, one per isomorphism type.

Backed by the networkx graph atlas, which lists every graph on at most seven
nodes. Vertices are renamed ``a, b, c, ...`` in atlas node order.
"""

from __future__ import annotations

from functools import lru_cache

import networkx as nx

from .graph_core import Graph

__all__ = ["MAX_CORPUS_VERTICES", "corpus", "from_networkx", "to_networkx"]

MAX_CORPUS_VERTICES = 7
_NAMES = "abcdefg"


def from_networkx(h, names=None) -> Graph:
    nodes = list(h.nodes)
    names = list(names or _NAMES[:len(nodes)])
    rename = dict(zip(nodes, names))
    return Graph(names, [(rename[a], rename[b]) for a, b in h.edges])


def to_networkx(g: Graph):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.sorted_edges())
    return h


@lru_cache(maxsize=None)
def _atlas() -> tuple:
    return tuple(from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() > 0)


def corpus(max_vertices: int, min_vertices: int = 1) -> list:
    """Graphs with ``min_vertices <= n <= max_vertices``, in atlas order."""
    if not 1 <= max_vertices <= MAX_CORPUS_VERTICES:
        raise ValueError(f"corpus size must be between 1 and {MAX_CORPUS_VERTICES}")
    return [g for g in _atlas() if min_vertices <= len(g) <= max_vertices]
