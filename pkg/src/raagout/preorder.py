"""Domination preorder on vertices and its equivalence classes.

``u <= v`` when ``lk(u)`` is contained in ``st(v)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph_core import Graph, VertexSet

__all__ = [
    "ClassOrder",
    "EquivClass",
    "dominates",
    "dominance_table",
    "equivalence_classes",
    "equivalent",
    "gamma_leq",
]

ABELIAN = "abelian"
FREE = "free"
SINGLETON = "singleton"


@lru_cache(maxsize=4096)
def dominance_table(g: Graph) -> frozenset:
    """All pairs ``(u, v)`` with ``u <= v``."""
    pairs = set()
    for u in g.vertices:
        lk = g.neighbors(u)
        for v in g.vertices:
            if lk <= g.neighbors(v) | {v}:
                pairs.add((u, v))
    return frozenset(pairs)


def dominates(g: Graph, u, v) -> bool:
    """True iff ``u <= v``; the name reads "u is dominated by v"."""
    g.check_vertex(u)
    g.check_vertex(v)
    return (u, v) in dominance_table(g)


def equivalent(g: Graph, u, v) -> bool:
    table = dominance_table(g)
    return (u, v) in table and (v, u) in table


@dataclass(frozen=True)
class EquivClass:
    members: VertexSet
    kind: str

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_abelian(self) -> bool:
        """Abelian in the wide sense (singletons count as both)."""
        return self.kind in (ABELIAN, SINGLETON)

    @property
    def is_free(self) -> bool:
        return self.kind in (FREE, SINGLETON)

    @property
    def non_abelian(self) -> bool:
        return self.kind == FREE

    def __contains__(self, v):
        return v in self.members

    def to_json(self):
        return {"members": list(self.members), "kind": self.kind, "size": self.size}


@dataclass(frozen=True)
class ClassOrder:
    """Classes in enumeration order, the strict order between them, and a
    vertex enumeration refining the preorder (smaller vertices first)."""

    graph: Graph
    classes: tuple
    relation: frozenset  # pairs (i, j) of class indices with class i < class j
    enumeration: tuple

    def class_of(self, v) -> EquivClass:
        return self.classes[self.class_index(v)]

    def class_index(self, v) -> int:
        for i, c in enumerate(self.classes):
            if v in c.members:
                return i
        raise KeyError(v)

    def below(self, i, j) -> bool:
        return (i, j) in self.relation

    @property
    def sizes(self) -> list:
        return [c.size for c in self.classes]


@lru_cache(maxsize=4096)
def equivalence_classes(g: Graph) -> ClassOrder:
    table = dominance_table(g)
    groups = []
    assigned = set()
    for v in g.vertices:
        if v in assigned:
            continue
        members = [u for u in g.vertices if (u, v) in table and (v, u) in table]
        assigned.update(members)
        groups.append(members)

    def kind_of(members):
        if len(members) == 1:
            return SINGLETON
        if g.adjacent(members[0], members[1]):
            return ABELIAN
        return FREE

    # class a < class b iff a representative of a is dominated by one of b
    k = len(groups)
    less = {(a, b) for a in range(k) for b in range(k)
            if a != b and (groups[a][0], groups[b][0]) in table}

    # topological sort, ties broken by least declaration index
    order = []
    remaining = set(range(k))
    while remaining:
        ready = [a for a in remaining if not any((b, a) in less for b in remaining)]
        nxt = min(ready, key=lambda a: g.index[groups[a][0]])
        order.append(nxt)
        remaining.discard(nxt)
    pos = {old: new for new, old in enumerate(order)}
    classes = tuple(EquivClass(VertexSet(g, groups[a]), kind_of(groups[a])) for a in order)
    relation = frozenset((pos[a], pos[b]) for a, b in less)
    enumeration = tuple(v for c in classes for v in c.members)
    return ClassOrder(g, classes, relation, enumeration)


def gamma_leq(g: Graph, s) -> VertexSet:
    """Vertices dominated by some member of ``s``."""
    s = VertexSet(g, s)
    table = dominance_table(g)
    return VertexSet(g, {u for u in g.vertices if any((u, v) in table for v in s)})
