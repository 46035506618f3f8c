"""Finite simplicial graphs with named vertices.

A :class:`Graph` is an immutable value. Vertex order is the declaration order
and every canonical ordering in the package derives from it.
"""

from __future__ import annotations

import itertools
import re
from functools import cached_property

__all__ = [
    "Graph",
    "GraphError",
    "VertexSet",
    "complete_graph",
    "components_minus",
    "cycle_graph",
    "discrete_graph",
    "external_boundary",
    "graph_symmetries",
    "link",
    "parse_graph",
    "path_graph",
    "serialize_graph",
    "star",
]

DEFAULT_SYMMETRY_LIMIT = 10


class GraphError(ValueError):
    """Malformed graph data or an illegal graph query."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """A finite simplicial graph.

    Parameters
    ----------
    vertices : iterable of str
        Distinct vertex names, in declaration order.
    edges : iterable of pairs
        Unordered vertex pairs. Duplicates collapse; loops are rejected.
    """

    __slots__ = ("vertices", "edges", "index", "_adj", "__dict__")

    def __init__(self, vertices, edges=()):
        vertices = tuple(vertices)
        index = {}
        for i, v in enumerate(vertices):
            if not isinstance(v, str) or not v:
                raise GraphError(f"vertex names must be non-empty strings, got {v!r}")
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}")
            index[v] = i
        adj = {v: set() for v in vertices}
        edge_set = set()
        for e in edges:
            a, b = tuple(e)
            for end in (a, b):
                if end not in index:
                    raise GraphError(f"edge {a}-{b} references undeclared vertex {end!r}")
            if a == b:
                raise GraphError(f"loop edge {a}-{a}")
            adj[a].add(b)
            adj[b].add(a)
            edge_set.add(frozenset((a, b)))
        self.vertices = vertices
        self.index = index
        self.edges = frozenset(edge_set)
        self._adj = {v: frozenset(n) for v, n in adj.items()}

    # -- basic queries -------------------------------------------------
    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self.index

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph({serialize_graph(self)!r})"

    def check_vertex(self, v):
        if v not in self.index:
            raise GraphError(f"unknown vertex {v!r}")
        return v

    def adjacent(self, u, v) -> bool:
        return v in self._adj[u]

    def neighbors(self, v) -> frozenset:
        return self._adj[self.check_vertex(v)]

    def vertex_set(self, members) -> "VertexSet":
        return VertexSet(self, members)

    def sorted(self, members) -> tuple:
        """Members in declaration order."""
        return tuple(sorted(members, key=self.index.__getitem__))

    def induced(self, members) -> "Graph":
        """Induced subgraph; keeps declaration order."""
        keep = self.sorted(self.vertex_set(members))
        kept = set(keep)
        return Graph(keep, [e for e in self.edges if e <= kept])

    def sorted_edges(self):
        out = []
        for e in self.edges:
            a, b = self.sorted(e)
            out.append((a, b))
        out.sort(key=lambda p: (self.index[p[0]], self.index[p[1]]))
        return out

    @cached_property
    def adjacency_masks(self) -> tuple:
        """Bitmask of neighbours per vertex index."""
        masks = []
        for v in self.vertices:
            m = 0
            for u in self._adj[v]:
                m |= 1 << self.index[u]
            masks.append(m)
        return tuple(masks)


class VertexSet(frozenset):
    """A subset of a graph's vertices that iterates in declaration order."""

    def __new__(cls, graph: Graph, members=()):
        members = frozenset(members)
        bad = [m for m in members if m not in graph.index]
        if bad:
            raise GraphError(f"vertices {sorted(bad)} are not in the graph")
        self = super().__new__(cls, members)
        self._order = tuple(sorted(members, key=graph.index.__getitem__))
        return self

    def __iter__(self):
        return iter(self._order)

    def __repr__(self):
        return "{" + ",".join(self._order) + "}"

    def __reduce__(self):
        raise TypeError("VertexSet is bound to a graph; convert with tuple() first")

    def as_tuple(self) -> tuple:
        return self._order


def link(g: Graph, v) -> VertexSet:
    return VertexSet(g, g.neighbors(v))


def star(g: Graph, v) -> VertexSet:
    return VertexSet(g, g.neighbors(v) | {v})


def components_minus(g: Graph, removed) -> list:
    """Connected components of ``g`` minus ``removed``, ordered by least vertex."""
    removed = VertexSet(g, removed)
    seen = set(removed)
    cells = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        cells.append(VertexSet(g, comp))
    return cells


def external_boundary(g: Graph, z) -> VertexSet:
    """Vertices outside ``z`` with a neighbour in ``z``."""
    z = VertexSet(g, z)
    out = set()
    for v in z:
        out |= g.neighbors(v)
    return VertexSet(g, out - z)


def _degree_signature(g: Graph, v):
    return (len(g.neighbors(v)), tuple(sorted(len(g.neighbors(u)) for u in g.neighbors(v))))


def graph_symmetries(g: Graph, limit: int = DEFAULT_SYMMETRY_LIMIT) -> list:
    """All graph automorphisms as dicts ``vertex -> image``.

    Pruned backtracking: a vertex may only map to a vertex with the same
    degree signature, and adjacency to already-placed vertices must match.
    """
    n = len(g)
    if n > limit:
        raise GraphError(f"symmetry search capped at {limit} vertices, graph has {n}")
    verts = g.vertices
    sig = {v: _degree_signature(g, v) for v in verts}
    result = []
    image = {}
    used = set()

    def extend(i):
        if i == n:
            result.append(dict(image))
            return
        v = verts[i]
        for w in verts:
            if w in used or sig[w] != sig[v]:
                continue
            if all(g.adjacent(v, u) == g.adjacent(w, image[u]) for u in verts[:i]):
                image[v] = w
                used.add(w)
                extend(i + 1)
                used.discard(w)
                del image[v]

    extend(0)
    return result


# -- text format ---------------------------------------------------------

_EDGE_RE = re.compile(r"^([^\s-]+)-([^\s-]+)$")


def parse_graph(text: str) -> Graph:
    """Parse the ``vertices ... / edges ...`` text format."""
    vertices = None
    edges = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        tokens = rest.split()
        if head == "vertices":
            if vertices is not None:
                raise GraphError("repeated 'vertices' line", lineno)
            seen = set()
            for t in tokens:
                if t in seen:
                    raise GraphError(f"duplicate vertex {t!r}", lineno)
                if "-" in t:
                    raise GraphError(f"vertex name {t!r} may not contain '-'", lineno)
                seen.add(t)
            vertices = tokens
        elif head == "edges":
            if vertices is None:
                raise GraphError("'edges' line before 'vertices' line", lineno)
            if edges is not None:
                raise GraphError("repeated 'edges' line", lineno)
            edges = []
            declared = set(vertices)
            for t in tokens:
                m = _EDGE_RE.match(t)
                if not m:
                    raise GraphError(f"malformed edge {t!r}", lineno)
                a, b = m.groups()
                for end in (a, b):
                    if end not in declared:
                        raise GraphError(f"edge {t} references undeclared vertex {end!r}", lineno)
                if a == b:
                    raise GraphError(f"loop edge {t}", lineno)
                edges.append((a, b))
        else:
            raise GraphError(f"unexpected keyword {head!r}", lineno)
    if vertices is None:
        raise GraphError("missing 'vertices' line")
    return Graph(vertices, edges or ())


def serialize_graph(g: Graph) -> str:
    edges = " ".join(f"{a}-{b}" for a, b in g.sorted_edges())
    return f"vertices {' '.join(g.vertices)}\nedges{(' ' + edges) if edges else ''}\n"


# -- small named graphs used throughout tests and demos -------------------

def path_graph(n: int, names=None) -> Graph:
    names = list(names or "abcdefghij"[:n])
    return Graph(names, zip(names, names[1:]))


def complete_graph(n: int, names=None) -> Graph:
    names = list(names or [f"v{i}" for i in range(1, n + 1)])
    return Graph(names, itertools.combinations(names, 2))


def discrete_graph(n: int, names=None) -> Graph:
    names = list(names or ("xyz" if n == 3 else [f"v{i}" for i in range(1, n + 1)]))
    return Graph(names, ())


def cycle_graph(n: int, names=None) -> Graph:
    names = list(names or [f"v{i}" for i in range(1, n + 1)])
    return Graph(names, [(names[i], names[(i + 1) % n]) for i in range(n)])
