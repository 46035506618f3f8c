"""Generators of Aut(A_Gamma) and automorphisms given by generator images.

Conventions
-----------
* ``TransvectionRight(v, w)`` sends ``v -> v w`` and ``TransvectionLeft(v, w)``
  sends ``v -> w v``; ``w`` is the multiplier and ``v <= w`` is required.
* ``PartialConjugation(v, Z)`` sends ``z -> v z v^-1`` for ``z`` in ``Z``.
* ``CommutatorTransvection(u, v, w)`` sends ``u -> u [v, w]`` with
  ``[v, w] = v w v^-1 w^-1``.
* ``compose(f, h)`` is ``f o h`` (apply ``h`` first). Commutators of
  automorphisms are ``[f, h] = f h f^-1 h^-1`` in that composition.

Every kind carries a ``power`` so inverses stay inside the same kind; partial
conjugation inverses use exponent -1 rather than the complementary support.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .graph_core import Graph, GraphError, VertexSet, components_minus, star
from .preorder import dominance_table, dominates, equivalence_classes, gamma_leq
from .words import Word, cyclically_reduce, split_product

__all__ = [
    "Automorphism",
    "AutomorphismError",
    "CommutatorTransvection",
    "Inner",
    "Inversion",
    "OutEquality",
    "PartialConjugation",
    "ShapeError",
    "Symmetry",
    "TransvectionLeft",
    "TransvectionRight",
    "apply",
    "commutator",
    "compose",
    "equal_in_out",
    "factor_map",
    "format_generator",
    "identity",
    "inner_conjugator",
    "invert",
    "is_partial_conjugation_support",
    "make_generator",
    "out0_generators",
    "parse_generator",
    "restriction_map",
    "rho_to_class",
    "support_conjugation_inner_test",
]


class AutomorphismError(ValueError):
    pass


class ShapeError(AutomorphismError):
    """Automorphism is not a support conjugation ``z -> w z w^-1`` on one set."""


# -- generator kinds ---------------------------------------------------------

def _letter(g, v, s=1):
    return Word.letter(g, v, s)


def _check_power(p):
    if p not in (1, -1):
        raise AutomorphismError(f"power must be +1 or -1, got {p}")


def is_partial_conjugation_support(g: Graph, v, support) -> bool:
    """``support`` is a non-empty union of components of ``g - st(v)``."""
    support = frozenset(support)
    if not support:
        return False
    st = star(g, v)
    if support & st:
        return False
    for comp in components_minus(g, st):
        if comp & support and not comp <= support:
            return False
    return True


@dataclass(frozen=True)
class Inversion:
    v: str

    def validate(self, g):
        g.check_vertex(self.v)

    def images(self, g):
        return {self.v: _letter(g, self.v, -1)}

    def inverse(self):
        return self


@dataclass(frozen=True)
class Symmetry:
    """``mapping`` holds ``(vertex, image)`` pairs for every vertex."""

    mapping: tuple

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(sorted(d.items())))

    def as_dict(self):
        return dict(self.mapping)

    def validate(self, g):
        d = self.as_dict()
        if set(d) != set(g.vertices) or set(d.values()) != set(g.vertices):
            raise AutomorphismError("symmetry must be a permutation of all vertices")
        for u, v in combinations(g.vertices, 2):
            if g.adjacent(u, v) != g.adjacent(d[u], d[v]):
                raise AutomorphismError(f"permutation does not preserve adjacency of {u},{v}")

    def images(self, g):
        return {u: _letter(g, w) for u, w in self.mapping if u != w}

    def inverse(self):
        return Symmetry(tuple(sorted((w, u) for u, w in self.mapping)))


@dataclass(frozen=True)
class TransvectionRight:
    v: str
    w: str
    power: int = 1

    def validate(self, g):
        _check_power(self.power)
        if self.v == self.w:
            raise AutomorphismError("transvection needs distinct vertices")
        if not dominates(g, self.v, self.w):
            raise AutomorphismError(f"transvection requires {self.v} <= {self.w}")

    def images(self, g):
        return {self.v: _letter(g, self.v) * _letter(g, self.w, self.power)}

    def inverse(self):
        return TransvectionRight(self.v, self.w, -self.power)

    @property
    def multiplier(self):
        return self.w


@dataclass(frozen=True)
class TransvectionLeft:
    v: str
    w: str
    power: int = 1

    def validate(self, g):
        TransvectionRight(self.v, self.w, self.power).validate(g)

    def images(self, g):
        return {self.v: _letter(g, self.w, self.power) * _letter(g, self.v)}

    def inverse(self):
        return TransvectionLeft(self.v, self.w, -self.power)

    @property
    def multiplier(self):
        return self.w


@dataclass(frozen=True)
class PartialConjugation:
    multiplier: str
    support: frozenset
    power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))

    def validate(self, g):
        _check_power(self.power)
        g.check_vertex(self.multiplier)
        VertexSet(g, self.support)
        if not is_partial_conjugation_support(g, self.multiplier, self.support):
            raise AutomorphismError(
                f"support {sorted(self.support)} is not a union of components "
                f"of the complement of st({self.multiplier})")

    def images(self, g):
        m = _letter(g, self.multiplier, self.power)
        return {z: _letter(g, z).conjugate_by(m) for z in self.support}

    def inverse(self):
        return PartialConjugation(self.multiplier, self.support, -self.power)


@dataclass(frozen=True)
class CommutatorTransvection:
    u: str
    v: str
    w: str
    power: int = 1

    def validate(self, g):
        _check_power(self.power)
        if len({self.u, self.v, self.w}) != 3:
            raise AutomorphismError("commutator transvection needs distinct vertices")
        if not (dominates(g, self.u, self.v) and dominates(g, self.u, self.w)):
            raise AutomorphismError(f"requires {self.u} <= {self.v} and {self.u} <= {self.w}")
        if g.adjacent(self.v, self.w):
            raise AutomorphismError(f"[{self.v},{self.w}] = 1")

    def commutator_word(self, g):
        v, w = _letter(g, self.v), _letter(g, self.w)
        return v * w * v.inverse() * w.inverse()

    def images(self, g):
        return {self.u: _letter(g, self.u) * (self.commutator_word(g) ** self.power)}

    def inverse(self):
        return CommutatorTransvection(self.u, self.v, self.w, -self.power)


@dataclass(frozen=True)
class Inner:
    word: Word

    def validate(self, g):
        if self.word.graph != g:
            raise AutomorphismError("conjugator lives in another group")

    def images(self, g):
        return {v: _letter(g, v).conjugate_by(self.word) for v in g.vertices}

    def inverse(self):
        return Inner(self.word.inverse())


GeneratorKind = (Inversion, Symmetry, TransvectionRight, TransvectionLeft,
                 PartialConjugation, CommutatorTransvection, Inner)


# -- automorphisms -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Automorphism:
    """An automorphism given by the images of the generators.

    ``provenance`` is a tuple of generator kinds whose composition (leftmost
    applied last) equals this automorphism, or None when unknown.
    """

    graph: Graph
    images: tuple  # Word per vertex, in declaration order
    provenance: tuple | None = field(default=None)

    def image(self, v) -> Word:
        return self.images[self.graph.index[v]]

    def image_map(self) -> dict:
        return dict(zip(self.graph.vertices, self.images))

    def is_identity(self) -> bool:
        return all(len(w) == 1 and w.codes[0] == 2 * i for i, w in enumerate(self.images))

    def same_images(self, other: "Automorphism") -> bool:
        return self.graph == other.graph and self.images == other.images

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __matmul__(self, other):
        return compose(self, other)

    def __str__(self):
        moved = [f"{v}->{w}" for v, w in self.image_map().items()
                 if not (len(w) == 1 and w.letters()[0] == (v, 1))]
        return "{" + ", ".join(moved) + "}" if moved else "id"


def _check_relations(g: Graph, images):
    for e in g.edges:
        a, b = tuple(e)
        fa, fb = images[g.index[a]], images[g.index[b]]
        if fa * fb != fb * fa:
            raise AutomorphismError(f"images of adjacent {a},{b} do not commute")


def from_images(g: Graph, image_map: dict, provenance=None, check=True) -> Automorphism:
    images = tuple(image_map.get(v, _letter(g, v)) for v in g.vertices)
    if check:
        _check_relations(g, images)
    return Automorphism(g, images, provenance)


def identity(g: Graph) -> Automorphism:
    return Automorphism(g, tuple(_letter(g, v) for v in g.vertices), ())


def make_generator(g: Graph, kind) -> Automorphism:
    if not isinstance(kind, GeneratorKind):
        raise AutomorphismError(f"not a generator kind: {kind!r}")
    kind.validate(g)
    return from_images(g, kind.images(g), provenance=(kind,))


def apply(f: Automorphism, w: Word) -> Word:
    if f.graph != w.graph:
        raise GraphError("automorphism and word live on different graphs")
    codes = []
    for c in w.codes:
        img = f.images[c >> 1].codes
        if c & 1:
            codes.extend(d ^ 1 for d in reversed(img))
        else:
            codes.extend(img)
    return Word(f.graph, codes)


def compose(*fs: Automorphism) -> Automorphism:
    """``compose(f, h, ...)`` acts as ``w -> f(h(...(w)))``."""
    if not fs:
        raise AutomorphismError("compose needs at least one automorphism")
    result = fs[-1]
    for f in reversed(fs[:-1]):
        if f.graph != result.graph:
            raise GraphError("automorphisms live on different graphs")
        prov = None
        if f.provenance is not None and result.provenance is not None:
            prov = f.provenance + result.provenance
        result = Automorphism(f.graph, tuple(apply(f, w) for w in result.images), prov)
    return result


def invert(f: Automorphism) -> Automorphism:
    if f.provenance is None:
        raise AutomorphismError("cannot invert an automorphism without provenance")
    g = f.graph
    result = identity(g)
    for kind in f.provenance:
        result = compose(make_generator(g, kind.inverse()), result)
    return result


def commutator(f: Automorphism, h: Automorphism) -> Automorphism:
    """``f h f^-1 h^-1``."""
    return compose(f, h, invert(f), invert(h))


def power(f: Automorphism, n: int) -> Automorphism:
    base = f if n >= 0 else invert(f)
    result = identity(f.graph)
    for _ in range(abs(n)):
        result = compose(base, result)
    return result


# -- equality in Out -------------------------------------------------------------

@dataclass(frozen=True)
class OutEquality:
    status: str  # "equal" | "not_equal" | "unknown"
    witness: Word | None = None
    reason: str = ""

    EQUAL = "equal"
    NOT_EQUAL = "not_equal"
    UNKNOWN = "unknown"

    def __bool__(self):
        return self.status == self.EQUAL


@lru_cache(maxsize=64)
def reduced_words_up_to(g: Graph, bound: int) -> tuple:
    """All group elements of word length <= bound, shortest first."""
    out = [Word.identity(g)]
    seen = {()}
    frontier = [()]
    letters = range(2 * len(g))
    for length in range(1, bound + 1):
        nxt = []
        for codes in frontier:
            for c in letters:
                w = Word(g, codes + (c,))
                if len(w) == length and w.codes not in seen:
                    seen.add(w.codes)
                    nxt.append(w.codes)
                    out.append(w)
        frontier = nxt
    return tuple(out)


def _is_conjugation_by(d: Automorphism, gw: Word) -> bool:
    g = d.graph
    for v, img in zip(g.vertices, d.images):
        if _letter(g, v).conjugate_by(gw) != img:
            return False
    return True


def equal_in_out(f: Automorphism, h: Automorphism, conjugator_bound: int = 4) -> OutEquality:
    """Compare ``f`` and ``h`` in Out(A_Gamma).

    ``equal`` carries ``g`` with ``h^-1 f = ad_g`` and ``|g| <= conjugator_bound``.
    ``not_equal`` is returned only when the abelianised images differ.
    """
    if f.graph != h.graph:
        raise GraphError("automorphisms live on different graphs")
    if conjugator_bound < 0:
        raise AutomorphismError("conjugator bound must be non-negative")
    g = f.graph
    for v, a, b in zip(g.vertices, f.images, h.images):
        if a.exponent_sums() != b.exponent_sums():
            return OutEquality(OutEquality.NOT_EQUAL, None,
                               f"standard representation differs at column {v}")
    candidates = reduced_words_up_to(g, conjugator_bound)
    if h.provenance is not None:
        d = compose(invert(h), f)
        for gw in candidates:
            if _is_conjugation_by(d, gw):
                return OutEquality(OutEquality.EQUAL, gw)
    elif f.provenance is not None:
        d = compose(invert(f), h)
        for gw in candidates:
            if _is_conjugation_by(d, gw):
                return OutEquality(OutEquality.EQUAL, gw.inverse())
    else:
        # f = h o ad_g  <=>  f(v) = h(g) h(v) h(g)^-1
        for gw in candidates:
            hg = apply(h, gw)
            if all(hv.conjugate_by(hg) == fv for hv, fv in zip(h.images, f.images)):
                return OutEquality(OutEquality.EQUAL, gw)
    return OutEquality(OutEquality.UNKNOWN, None,
                       f"no conjugator of length <= {conjugator_bound}")


# -- exact inner tests -----------------------------------------------------------

def _intersect_cosets(g: Graph, cosets):
    """Intersect left cosets ``c A_S``; return ``(k, R)`` with result ``k A_R`` or None."""
    k = Word.identity(g)
    r = frozenset(g.vertices)
    for c, s in cosets:
        split = split_product(k.inverse() * c, r, s)
        if split is None:
            return None
        p, _ = split
        k = k * p
        r = r & frozenset(s)
    return k, r


def _conjugator_of(f: Automorphism, v):
    """``c`` with ``f(v) = c v c^-1`` or None if ``f(v)`` is not conjugate to ``v``."""
    g = f.graph
    core, conj = cyclically_reduce(f.image(v))
    if core != _letter(g, v):
        return None
    return conj


def inner_conjugator(f: Automorphism):
    """Exact inner test: some ``g`` with ``f = ad_g``, or None."""
    g = f.graph
    cosets = []
    for v in g.vertices:
        c = _conjugator_of(f, v)
        if c is None:
            return None
        cosets.append((c, star(g, v)))
    hit = _intersect_cosets(g, cosets)
    return None if hit is None else hit[0]


def support_conjugation(f: Automorphism):
    """Detect ``(Z, w)`` with ``f`` fixing the complement of ``Z`` and acting on
    ``Z`` as conjugation by ``w``. Raises ShapeError if there is none."""
    g = f.graph
    moved = [v for v, img in zip(g.vertices, f.images) if img != _letter(g, v)]
    cosets = []
    for z in moved:
        c = _conjugator_of(f, z)
        if c is None:
            raise ShapeError(f"image of {z} is not conjugate to {z}")
        cosets.append((c, star(g, z)))
    hit = _intersect_cosets(g, cosets)
    if hit is None:
        raise ShapeError("no single conjugator acts on the whole support")
    return VertexSet(g, moved), hit[0]


def support_conjugation_inner_test(g: Graph, f: Automorphism) -> bool:
    """Decide exactly whether a support conjugation is inner.

    With ``P`` the common star of the fixed generators and ``Q`` the common
    star of the moved ones, ``f`` is inner iff ``w`` lies in ``A_P A_Q``.
    """
    if f.graph != g:
        raise GraphError("automorphism lives on another graph")
    z, w = support_conjugation(f)
    if not z:
        return True
    p = frozenset(g.vertices)
    for v in g.vertices:
        if v not in z:
            p &= star(g, v)
    q = frozenset(g.vertices)
    for v in z:
        q &= star(g, v)
    return split_product(w, p, q) is not None


# -- generator enumeration ---------------------------------------------------------

def transvections(g: Graph) -> list:
    out = []
    table = dominance_table(g)
    for v in g.vertices:
        for w in g.vertices:
            if v != w and (v, w) in table:
                out.append(TransvectionRight(v, w))
                out.append(TransvectionLeft(v, w))
    return out


def partial_conjugations(g: Graph, closure: bool = False) -> list:
    """Partial conjugations with connected support; with ``closure`` also the
    complements of single components inside ``g - st(v)``."""
    out = []
    for v in g.vertices:
        comps = components_minus(g, star(g, v))
        supports = [frozenset(c) for c in comps]
        if closure and len(comps) >= 3:
            whole = frozenset().union(*supports)
            supports += [whole - c for c in supports]
        for s in supports:
            out.append(PartialConjugation(v, s))
    return out


def out0_generators(g: Graph) -> list:
    """Transvections (both sides) and connected-support partial conjugations."""
    return transvections(g) + partial_conjugations(g)


# -- factor and restriction maps ----------------------------------------------------

def _downward_closed(g, sub):
    return gamma_leq(g, sub) == frozenset(sub)


def factor_map(g: Graph, sub, kind):
    """Image of ``kind`` under killing the vertices outside ``sub``.

    Returns a generator kind on ``g.induced(sub)`` or None for the identity.
    """
    sub = VertexSet(g, sub)
    if not _downward_closed(g, sub):
        raise AutomorphismError("factor map needs a downward-closed vertex set")
    kind.validate(g)
    if isinstance(kind, Inversion):
        return kind if kind.v in sub else None
    if isinstance(kind, (TransvectionRight, TransvectionLeft)):
        return kind if kind.v in sub and kind.w in sub else None
    if isinstance(kind, PartialConjugation):
        if kind.multiplier not in sub:
            return None
        support = kind.support & sub
        return PartialConjugation(kind.multiplier, support, kind.power) if support else None
    if isinstance(kind, CommutatorTransvection):
        return kind if {kind.u, kind.v, kind.w} <= sub else None
    if isinstance(kind, Inner):
        h = g.induced(sub)
        letters = [(v, s) for v, s in kind.word.letters() if v in sub]
        w = Word.from_letters(h, letters)
        return Inner(w) if w else None
    if isinstance(kind, Symmetry):
        d = kind.as_dict()
        if {d[v] for v in sub} != set(sub):
            raise AutomorphismError("symmetry does not preserve the subgraph")
        restricted = {v: d[v] for v in sub}
        if all(a == b for a, b in restricted.items()):
            return None
        return Symmetry.from_dict(restricted)
    raise AutomorphismError(f"unsupported generator {kind!r}")


def restriction_map(g: Graph, sub, kind):
    """Restriction to ``A_sub`` of a generator preserving its conjugacy class.

    Returns a generator kind on ``g.induced(sub)`` or None when the restriction
    is trivial in Out(A_sub).
    """
    sub = VertexSet(g, sub)
    kind.validate(g)
    if isinstance(kind, Inversion):
        return kind if kind.v in sub else None
    if isinstance(kind, (TransvectionRight, TransvectionLeft)):
        if kind.v not in sub:
            return None
        if kind.w not in sub:
            raise AutomorphismError(
                f"{format_generator(kind)} moves A_sub: multiplier {kind.w} outside it")
        return kind
    if isinstance(kind, PartialConjugation):
        v = kind.multiplier
        if v in sub:
            support = kind.support & sub
            if not support or support == frozenset(sub) - star(g, v):
                return None
            return PartialConjugation(v, support, kind.power)
        # moving all of sub - st(v) restricts to ad_v, moving none of it to the identity
        outside = frozenset(sub) - star(g, v)
        moved = outside & kind.support
        if moved and moved != outside:
            raise AutomorphismError(
                f"{format_generator(kind)} conjugates only part of the subgraph; it does "
                "not preserve its conjugacy class")
        return None
    if isinstance(kind, CommutatorTransvection):
        if kind.u not in sub:
            return None
        if kind.v not in sub or kind.w not in sub:
            raise AutomorphismError("commutator transvection moves A_sub off itself")
        return kind
    if isinstance(kind, Inner):
        return None
    if isinstance(kind, Symmetry):
        return factor_map(g, sub, kind) if _downward_closed(g, sub) else None
    raise AutomorphismError(f"unsupported generator {kind!r}")


def rho_to_class(g: Graph, cls) -> dict:
    """Map every Out^0 generator of ``g`` to its image in Out^0(A_cls).

    The image is factor map onto the downward closure of the class followed by
    restriction to the class. Values are generator kinds or None.
    """
    members = VertexSet(g, getattr(cls, "members", cls))
    if len(members) < 2:
        raise AutomorphismError("rho_to_class needs a class of size at least 2")
    order = equivalence_classes(g)
    if order.class_of(next(iter(members))).members != members:
        raise AutomorphismError(f"{members!r} is not an equivalence class")
    closure = gamma_leq(g, members)
    out = {}
    for kind in out0_generators(g):
        fk = factor_map(g, closure, kind)
        if fk is None:
            out[kind] = None
            continue
        out[kind] = restriction_map(g.induced(closure), members, fk)
    return out


# -- text syntax ------------------------------------------------------------------------

_GEN_RE = re.compile(r"^(R|L|C|inv|K|sym|ad)\[(.*)\](?:\^(-?1))?$")


def parse_generator(g: Graph, text: str):
    """Parse ``R[a<-b]``, ``L[a<-b]``, ``C[v;Z=z1,z2]``, ``inv[v]``,
    ``K[u;v,w]``, ``sym[a>c,c>a]`` or ``ad[word]``, optionally ``^-1``."""
    m = _GEN_RE.match(text.strip())
    if not m:
        raise AutomorphismError(f"cannot parse generator {text!r}")
    head, body, pw = m.groups()
    p = int(pw) if pw else 1
    try:
        if head in ("R", "L"):
            v, w = (s.strip() for s in body.split("<-"))
            cls = TransvectionRight if head == "R" else TransvectionLeft
            kind = cls(v, w, p)
        elif head == "C":
            v, rest = body.split(";")
            if not rest.strip().startswith("Z="):
                raise ValueError
            support = [s.strip() for s in rest.strip()[2:].split(",") if s.strip()]
            kind = PartialConjugation(v.strip(), frozenset(support), p)
        elif head == "inv":
            kind = Inversion(body.strip())
        elif head == "K":
            u, rest = body.split(";")
            v, w = (s.strip() for s in rest.split(","))
            kind = CommutatorTransvection(u.strip(), v, w, p)
        elif head == "sym":
            d = {v: v for v in g.vertices}
            for pair in filter(None, (s.strip() for s in body.split(","))):
                a, b = pair.split(">")
                d[a.strip()] = b.strip()
            kind = Symmetry.from_dict(d)
        else:
            from .words import parse_word
            kind = Inner(parse_word(g, body) ** p)
    except ValueError:
        raise AutomorphismError(f"cannot parse generator {text!r}") from None
    kind.validate(g)
    return kind


def format_generator(kind, g: Graph | None = None) -> str:
    suffix = ""
    if getattr(kind, "power", 1) == -1:
        suffix = "^-1"
    if isinstance(kind, TransvectionRight):
        return f"R[{kind.v}<-{kind.w}]{suffix}"
    if isinstance(kind, TransvectionLeft):
        return f"L[{kind.v}<-{kind.w}]{suffix}"
    if isinstance(kind, PartialConjugation):
        members = g.sorted(kind.support) if g is not None else sorted(kind.support)
        return f"C[{kind.multiplier};Z={','.join(members)}]{suffix}"
    if isinstance(kind, Inversion):
        return f"inv[{kind.v}]"
    if isinstance(kind, CommutatorTransvection):
        return f"K[{kind.u};{kind.v},{kind.w}]{suffix}"
    if isinstance(kind, Symmetry):
        moved = [f"{a}>{b}" for a, b in kind.mapping if a != b]
        return f"sym[{','.join(moved)}]"
    if isinstance(kind, Inner):
        return f"ad[{kind.word}]"
    raise AutomorphismError(f"unknown generator {kind!r}")
