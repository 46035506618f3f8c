"""Separating intersections of links.

A triple ``(x, y | z)`` of pairwise non-adjacent vertices is a SIL when the
component of ``g - (lk(x) & lk(y))`` containing ``z`` contains neither ``x``
nor ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .automorphisms import PartialConjugation, TransvectionLeft, TransvectionRight
from .graph_core import Graph, GraphError, VertexSet, components_minus, link, star
from .preorder import dominance_table, equivalence_classes, gamma_leq

__all__ = [
    "MenuEntry",
    "Sil",
    "SilError",
    "SilGeneratorMenu",
    "SpecialSil",
    "all_sils",
    "component_of",
    "find_special_sil",
    "has_sil",
    "is_sil",
    "is_special_sil",
    "minimal_sils",
    "shared_component_criterion",
    "sil_generator_menu",
]


class SilError(ValueError):
    pass


@dataclass(frozen=True)
class Sil:
    x: str
    y: str
    z: str
    component_z: VertexSet

    @property
    def triple(self):
        return (self.x, self.y, self.z)

    def __str__(self):
        return f"({self.x},{self.y}|{self.z})"

    def to_json(self):
        return {"x": self.x, "y": self.y, "z": self.z,
                "component_z": list(self.component_z)}


@dataclass(frozen=True)
class SpecialSil:
    sil: Sil
    classes: tuple  # EquivClass of x, y, z
    gamma_s: VertexSet
    gamma_leq_s: VertexSet

    def to_json(self):
        return {"sil": self.sil.to_json(),
                "classes": [c.to_json() for c in self.classes],
                "gamma_s": list(self.gamma_s),
                "gamma_leq_s": list(self.gamma_leq_s)}


def component_of(g: Graph, v, u) -> VertexSet:
    """The component of ``g - st(v)`` containing ``u``."""
    st = star(g, v)
    if u in st:
        raise GraphError(f"{u} lies in st({v})")
    for comp in components_minus(g, st):
        if u in comp:
            return comp
    raise AssertionError("unreachable")


def _check_distinct(g, x, y, z):
    for v in (x, y, z):
        g.check_vertex(v)
    if len({x, y, z}) != 3:
        raise SilError(f"SIL vertices must be distinct, got {(x, y, z)}")


def is_sil(g: Graph, x, y, z):
    """The Sil ``(x,y|z)`` if it is one, else None."""
    _check_distinct(g, x, y, z)
    if g.adjacent(x, y) or g.adjacent(x, z) or g.adjacent(y, z):
        return None
    cut = link(g, x) & link(g, y)
    for comp in components_minus(g, cut):
        if z in comp:
            if x in comp or y in comp:
                return None
            return Sil(x, y, z, comp)
    raise AssertionError("z lies outside the common link")


def shared_component_criterion(g: Graph, x, y, z) -> bool:
    """Independent SIL test: ``x, y, z`` pairwise non-adjacent and the
    components of ``z`` in ``g - st(x)`` and ``g - st(y)`` coincide."""
    _check_distinct(g, x, y, z)
    if g.adjacent(x, y) or g.adjacent(x, z) or g.adjacent(y, z):
        return False
    return component_of(g, x, z) == component_of(g, y, z)


def all_sils(g: Graph) -> list:
    """SILs up to ``(x,y|z) = (y,x|z)``; ``x`` precedes ``y`` in declaration order."""
    out = []
    verts = g.vertices
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            if g.adjacent(x, y):
                continue
            for z in verts:
                if z in (x, y):
                    continue
                s = is_sil(g, x, y, z)
                if s is not None:
                    out.append(s)
    return out


def has_sil(g: Graph) -> bool:
    return bool(all_sils(g))


# -- special SILs -----------------------------------------------------------

def _classes_of(g, s: Sil):
    order = equivalence_classes(g)
    return tuple(order.class_of(v) for v in s.triple)


def is_special_sil(g: Graph, s: Sil):
    """Check abelian classes, (Sp1) and (Sp2) by direct quantifier evaluation."""
    if is_sil(g, s.x, s.y, s.z) is None:
        raise SilError(f"{s} is not a SIL")
    classes = _classes_of(g, s)
    if not all(c.is_abelian for c in classes):
        return None
    gamma_s = VertexSet(g, set().union(*(c.members for c in classes)))
    leq = gamma_leq(g, s.triple)
    table = dominance_table(g)
    xs = s.triple
    # (Sp1): x_i <= u <= x_j for i != j forces u into gamma_s
    for u in leq:
        if u in gamma_s:
            continue
        for i in range(3):
            for j in range(3):
                if i != j and (xs[i], u) in table and (u, xs[j]) in table:
                    return None
    # (Sp2): every u outside gamma_s sees x_1, x_2, x_3 inside one Z + st(u)
    for u in leq:
        if u in gamma_s:
            continue
        st = star(g, u)
        if not any(all(v in comp or v in st for v in xs)
                   for comp in components_minus(g, st)):
            return None
    return SpecialSil(s, classes, gamma_s, leq)


def _below(table, a, b):
    return (a, b) in table


def minimal_sils(g: Graph) -> list:
    """SILs admitting no other SIL strictly below them under some permutation."""
    table = dominance_table(g)
    sils = all_sils(g)
    # both orientations so that every ordered SIL is compared
    ordered = [s.triple for s in sils] + [(s.y, s.x, s.z) for s in sils]

    def strictly_below(t, s):
        for p in permutations(range(3)):
            target = [s[k] for k in p]
            if all(_below(table, a, b) for a, b in zip(t, target)):
                if not all(_below(table, b, a) for a, b in zip(t, target)):
                    return True
        return False

    return [s for s in sils if not any(strictly_below(t, s.triple) for t in ordered)]


def _normalise(g: Graph, s: Sil) -> Sil:
    """Reorder to a SIL with ``x !<= z``, ``y !<= z`` and ``x !<= y``."""
    table = dominance_table(g)
    for p in permutations(s.triple):
        x, y, z = p
        if (x, z) in table or (y, z) in table or (x, y) in table:
            continue
        t = is_sil(g, x, y, z)
        if t is not None:
            return t
    raise SilError(f"{s} has no normalised ordering")


def find_special_sil(g: Graph):
    """A normalised special SIL of an all-abelian graph, or None without SILs."""
    order = equivalence_classes(g)
    bad = [c for c in order.classes if not c.is_abelian]
    if bad:
        raise SilError(f"class {bad[0].members!r} is not abelian")
    for s in minimal_sils(g):
        special = is_special_sil(g, _normalise(g, s))
        if special is None:
            raise SilError(f"minimal SIL {s} failed the special test")
        return special
    return None


# -- the induced generating set ------------------------------------------------

@dataclass(frozen=True)
class MenuEntry:
    item: str  # "S1" ... "S6"
    kind: object  # generator kind on the graph induced by gamma_s

    def describe(self):
        from .automorphisms import format_generator
        return f"{self.item}: {format_generator(self.kind)}"


@dataclass(frozen=True)
class SilGeneratorMenu:
    special: SpecialSil
    graph: Graph  # induced on gamma_s
    entries: tuple
    sizes: tuple  # (a, b, c)

    def by_item(self, item) -> list:
        return [e.kind for e in self.entries if e.item == item]

    @property
    def sil_automorphisms(self):
        return self.by_item("S1")

    @property
    def internal_transvections(self):
        return self.by_item("S2")

    @property
    def extra_partial_conjugations(self):
        return self.by_item("S3")

    @property
    def y_to_x_transvections(self):
        return self.by_item("S4")

    @property
    def z_to_x_transvections(self):
        return self.by_item("S5")

    @property
    def z_to_y_transvections(self):
        return self.by_item("S6")

    @property
    def case1(self) -> bool:
        return bool(self.extra_partial_conjugations)

    def to_json(self):
        from .automorphisms import format_generator
        return {"sizes": list(self.sizes),
                "entries": [{"item": e.item, "generator": format_generator(e.kind, self.graph)}
                            for e in self.entries]}


def _separates(g: Graph, cut, a, b) -> bool:
    for comp in components_minus(g, cut):
        if a & comp and b & comp:
            return False
    return True


def sil_generator_menu(g: Graph, s: SpecialSil) -> SilGeneratorMenu:
    x, y, z = s.sil.triple
    table = dominance_table(g)
    if (x, z) in table or (y, z) in table or (x, y) in table:
        raise SilError("menu needs the normalisation x !<= z, y !<= z, x !<= y")
    if is_special_sil(g, s.sil) is None:
        raise SilError(f"{s.sil} is not special")
    cx, cy, cz = (c.members for c in s.classes)
    h = g.induced(s.gamma_s)
    entries = []

    def add(item, kind):
        kind.validate(h)
        entries.append(MenuEntry(item, kind))

    for m in (*cx, *cy):
        add("S1", PartialConjugation(m, frozenset(cz)))
    for cls in (cx, cy, cz):
        for v in cls:
            for w in cls:
                if v != w:
                    add("S2", TransvectionRight(v, w))
                    add("S2", TransvectionLeft(v, w))
    if _separates(g, star(g, z), cx, cy):
        for m in cz:
            add("S3", PartialConjugation(m, frozenset(cx)))
    for item, lo, hi, (lo_cls, hi_cls) in (("S4", y, x, (cy, cx)),
                                          ("S5", z, x, (cz, cx)),
                                          ("S6", z, y, (cz, cy))):
        if (lo, hi) in table:
            for v in lo_cls:
                for w in hi_cls:
                    add(item, TransvectionRight(v, w))
                    add(item, TransvectionLeft(v, w))
    return SilGeneratorMenu(s, h, tuple(entries), (len(cx), len(cy), len(cz)))
