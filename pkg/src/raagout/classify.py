"""Graph-level verdicts: condition (*), the trichotomy branches, no-SIL structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .automorphisms import PartialConjugation, TransvectionRight, partial_conjugations
from .graph_core import Graph, link, serialize_graph, star
from .preorder import dominance_table, equivalence_classes
from .representations import largeness_witness
from .sil import all_sils, find_special_sil

__all__ = [
    "Classification",
    "ClassifyError",
    "DepthData",
    "NoSilDecomposition",
    "condition_star",
    "decompose_no_sil",
    "depth_data",
    "p_generating_set",
    "report",
    "trichotomy",
    "vastness_report",
]

VASTNESS_KEYS = ("sq_universal", "involves_all_finite",
                 "many_quasimorphisms_virtually", "not_boundedly_generated")


class ClassifyError(ValueError):
    pass


@dataclass(frozen=True)
class StarVerdict:
    holds: bool
    witness: dict | None

    def __bool__(self):
        return self.holds


def condition_star(g: Graph) -> StarVerdict:
    """SIL first, then a non-abelian class, then an abelian class of size two."""
    sils = all_sils(g)
    if sils:
        return StarVerdict(True, {"type": "sil", "sil": str(sils[0])})
    classes = equivalence_classes(g).classes
    for c in classes:
        if c.non_abelian:
            return StarVerdict(True, {"type": "non_abelian_class", "class": list(c.members)})
    for c in classes:
        if c.kind == "abelian" and c.size == 2:
            return StarVerdict(True, {"type": "abelian_class_size_2", "class": list(c.members)})
    return StarVerdict(False, None)


def vastness_report(g: Graph) -> dict:
    star_v = condition_star(g)
    if star_v.holds:
        why = f"condition (*) holds via {star_v.witness['type']}"
    else:
        why = "condition (*) fails: no SIL, every class abelian of size other than 2"
    return {key: {"holds": star_v.holds, "justification": why} for key in VASTNESS_KEYS}


# -- no-SIL structure -------------------------------------------------------------

@dataclass(frozen=True)
class NoSilDecomposition:
    k: int
    pairs: tuple
    lam: Graph


def _require_no_sil(g):
    sils = all_sils(g)
    if sils:
        raise ClassifyError(f"graph has a SIL {sils[0]}")


def decompose_no_sil(g: Graph) -> NoSilDecomposition:
    """Peel off free pairs ``{x, y}`` with ``V = {x, y} + lk(x)``."""
    _require_no_sil(g)
    pairs = []
    h = g
    while True:
        free = [c for c in equivalence_classes(h).classes if c.non_abelian]
        if not free:
            return NoSilDecomposition(len(pairs), tuple(pairs), h)
        x, y = free[0].members.as_tuple()[:2]
        if free[0].size != 2 or link(h, x) != link(h, y) or \
                set(h.vertices) != {x, y} | link(h, x):
            raise ClassifyError(f"free class {free[0].members!r} does not split off")
        pairs.append((x, y))
        h = h.induced(link(h, x))


@dataclass(frozen=True)
class DepthData:
    depth: dict
    K: int
    levels: tuple  # levels[i - 1] is S_i

    def level(self, i):
        return self.levels[i - 1] if 1 <= i <= len(self.levels) else ()


@lru_cache(maxsize=1024)
def _depths(g: Graph) -> dict:
    table = dominance_table(g)
    memo = {}

    def depth(v):
        if v not in memo:
            below = [u for u in g.vertices if (u, v) in table and (v, u) not in table]
            memo[v] = 1 + max((depth(u) for u in below), default=0)
        return memo[v]

    return {v: depth(v) for v in g.vertices}


def p_generating_set(g: Graph) -> list:
    """Non-inner partial conjugations then ``R^u_v`` (``v -> v u``) with ``v < u`` strictly."""
    _require_no_sil(g)
    gens = []
    for pc in partial_conjugations(g, closure=True):
        rest = frozenset(g.vertices) - star(g, pc.multiplier)
        if pc.support != rest:
            gens.append(pc)
    table = dominance_table(g)
    for v in g.vertices:
        for u in g.vertices:
            if (v, u) in table and (u, v) not in table:
                gens.append(TransvectionRight(v, u))
    return gens


def _graded(d: dict, kind, i: int) -> bool:
    if isinstance(kind, PartialConjugation):
        return d[kind.multiplier] >= i
    return d[kind.w] - d[kind.v] >= i


def depth_data(g: Graph) -> DepthData:
    d = _depths(g)
    k = max(d.values(), default=0)
    gens = p_generating_set(g) if not all_sils(g) else []
    levels = tuple(tuple(x for x in gens if _graded(d, x, i)) for i in range(1, k + 1))
    return DepthData(d, k, levels)


def level_of(g: Graph, kind) -> int:
    """Largest ``i`` with ``kind`` in ``S_i``."""
    d = _depths(g)
    if isinstance(kind, PartialConjugation):
        return d[kind.multiplier]
    return d[kind.w] - d[kind.v]


# -- classification -------------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    graph: Graph
    star_condition: StarVerdict
    has_sil: bool
    br1a: dict | None
    br1b: object | None  # SpecialSil
    ses: dict | None
    br2_strict: bool
    vastness: dict
    largeness: object | None
    free_subgroup: bool
    sils: tuple = field(default=())

    @property
    def br2(self):
        return self.ses


def _br1a(g: Graph):
    best = None
    for c in equivalence_classes(g).classes:
        if c.non_abelian:
            cand = {"target": f"Out+(F_{c.size})", "n": c.size, "class": list(c.members)}
        elif c.kind == "abelian" and c.size == 2:
            cand = {"target": "SL_2(Z)", "n": 2, "class": list(c.members)}
        else:
            continue
        if best is None or cand["n"] > best["n"]:
            best = cand
    return best


def trichotomy(g: Graph) -> Classification:
    sils = tuple(all_sils(g))
    order = equivalence_classes(g)
    all_abelian = all(c.is_abelian for c in order.classes)
    br1b = find_special_sil(g) if sils and all_abelian else None
    ses = None
    if not sils:
        ses = {"blocks": order.sizes, "kernel_note": "finitely generated nilpotent",
               "depth_bound": depth_data(g).K}
    thm2 = not sils and all_abelian and all(c.size != 2 for c in order.classes)
    return Classification(
        graph=g,
        star_condition=condition_star(g),
        has_sil=bool(sils),
        br1a=_br1a(g),
        br1b=br1b,
        ses=ses,
        br2_strict=thm2,
        vastness=vastness_report(g),
        largeness=largeness_witness(g),
        free_subgroup=bool(sils) or any(c.size >= 2 for c in order.classes),
        sils=sils,
    )


def report(c: Classification) -> dict:
    g = c.graph
    return {
        "graph": {"vertices": list(g.vertices),
                  "edges": [list(e) for e in g.sorted_edges()],
                  "text": serialize_graph(g)},
        "classes": [cl.to_json() for cl in equivalence_classes(g).classes],
        "sils": [str(s) for s in c.sils],
        "special_sil": c.br1b.to_json() if c.br1b is not None else None,
        "star_condition": {"holds": c.star_condition.holds, "witness": c.star_condition.witness},
        "branches": {"br1a": c.br1a,
                     "br1b": str(c.br1b.sil) if c.br1b is not None else None,
                     "br2": c.ses is not None,
                     "br2_strict": c.br2_strict},
        "ses": {"blocks": c.ses["blocks"], "depth_bound": c.ses["depth_bound"],
                "kernel_note": c.ses["kernel_note"]} if c.ses else None,
        "vastness": {k: v["holds"] for k, v in c.vastness.items()},
        "largeness": c.largeness.to_json() if c.largeness is not None else None,
        "free_subgroup": c.free_subgroup,
    }
