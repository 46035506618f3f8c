"""Integer representations of automorphism groups.

Two representations live here.

``standard_matrix`` is the action on the abelianisation. Entry ``(u, v)`` is
the exponent sum of ``u`` in the image of ``v`` (columns are images), with
rows and columns in the class enumeration order, so Out^0 lands in a block
lower triangular group.

The homology representation acts on the (-1)-eigenspace ``V`` of the first
homology of the double cover of the Salvetti complex of ``Z^a * Z^b * Z^c``
defined by sending every generator to the non-trivial element of ``Z/2``.
``homology_matrix_oracle`` computes it from the chain complex with exact
rationals; ``homology_matrix_closed_form`` returns the known 2x2 matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian

import numpy as np
import sympy

from .automorphisms import (
    Automorphism, CommutatorTransvection, PartialConjugation, compose,
    make_generator, partial_conjugations)
from .graph_core import Graph
from .preorder import dominance_table, equivalence_classes
from .sil import SpecialSil, find_special_sil, has_sil, sil_generator_menu
from .words import Word

__all__ = [
    "Case1",
    "Case2Amalgam",
    "Case2HNN",
    "ClassSize2",
    "FreenessCertificate",
    "HomologyRepInput",
    "NonAbelianClassSize3",
    "RepresentationError",
    "block_mask",
    "check_block_structure",
    "day_generating_set",
    "homology_dimensions",
    "homology_matrix_closed_form",
    "homology_matrix_oracle",
    "is_torelli",
    "largeness_witness",
    "normalize_sign",
    "ping_pong_free_check",
    "salvetti_factor_graph",
    "standard_matrix",
]


class RepresentationError(ValueError):
    pass


# -- standard representation ----------------------------------------------------

def standard_matrix(g: Graph, f: Automorphism) -> np.ndarray:
    """Integer matrix of ``f`` on ``Z^V``, indexed by the class enumeration."""
    if f.graph != g:
        raise RepresentationError("automorphism lives on another graph")
    order = equivalence_classes(g).enumeration
    pos = {v: i for i, v in enumerate(order)}
    m = np.zeros((len(g), len(g)), dtype=np.int64)
    for v in g.vertices:
        for u, e in f.image(v).exponent_sums().items():
            m[pos[u], pos[v]] = e
    return m


def block_mask(g: Graph) -> np.ndarray:
    """``mask[u, v]`` is True iff ``v <= u`` (enumeration order)."""
    order = equivalence_classes(g).enumeration
    table = dominance_table(g)
    return np.array([[(v, u) in table for v in order] for u in order], dtype=bool)


def _exact_det(m) -> int:
    return int(sympy.Matrix(np.asarray(m).tolist()).det())


def check_block_structure(g: Graph, m) -> bool:
    m = np.asarray(m)
    if m.shape != (len(g), len(g)):
        raise RepresentationError(f"expected a {len(g)}x{len(g)} matrix, got {m.shape}")
    if np.any(m[~block_mask(g)] != 0):
        return False
    return _exact_det(m) == 1


def is_torelli(g: Graph, f: Automorphism) -> bool:
    return bool(np.array_equal(standard_matrix(g, f), np.eye(len(g), dtype=np.int64)))


def day_generating_set(g: Graph) -> list:
    """Partial conjugations (with complement closure) then commutator transvections."""
    out = partial_conjugations(g, closure=True)
    table = dominance_table(g)
    verts = g.vertices
    for u in verts:
        for i, v in enumerate(verts):
            for w in verts[i + 1:]:
                if u in (v, w) or g.adjacent(v, w):
                    continue
                if (u, v) in table and (u, w) in table:
                    out.append(CommutatorTransvection(u, v, w))
    return out


# -- homology representation --------------------------------------------------------

FAMILIES = ("C_X^y", "C_Y^z", "C_Z^x")

_CLOSED_FORM = {
    "C_X^y": ((-1, 0), (2, 1)),
    "C_Y^z": ((1, 0), (0, -1)),
    "C_Z^x": ((-1, -2), (0, 1)),
}

ORACLE_SIZE_LIMIT = 5


@dataclass(frozen=True)
class HomologyRepInput:
    """Class sizes and a generator of ``Z^a * Z^b * Z^c``.

    ``generator`` is a family name such as ``"C_X^y"`` (partial conjugation
    of class X by a member of class Y) or a tuple of names read as the
    composition left to right. ``index`` selects the multiplier inside its
    class for every factor.
    """

    a: int
    b: int
    c: int
    generator: object = "C_X^y"
    index: int = 0

    def __post_init__(self):
        for s in (self.a, self.b, self.c):
            if not isinstance(s, (int, np.integer)) or s < 1:
                raise RepresentationError(f"class sizes must be positive integers, got {s!r}")
        for fam in self.families:
            if fam not in FAMILIES:
                raise RepresentationError(f"unsupported generator {fam!r}")

    @property
    def families(self) -> tuple:
        gen = self.generator
        return (gen,) if isinstance(gen, str) else tuple(gen)

    @property
    def sizes(self):
        return (self.a, self.b, self.c)


def normalize_sign(m) -> np.ndarray:
    """Canonical representative of ``{m, -m}``: first non-zero entry positive,
    scanning row by row."""
    m = np.asarray(m, dtype=np.int64)
    flat = m.ravel()
    nz = np.flatnonzero(flat)
    if nz.size and flat[nz[0]] < 0:
        return -m
    return m.copy()


def homology_matrix_closed_form(inp: HomologyRepInput) -> np.ndarray:
    m = np.eye(2, dtype=np.int64)
    for fam in inp.families:
        m = m @ np.array(_CLOSED_FORM[fam], dtype=np.int64)
    return m


def salvetti_factor_graph(a: int, b: int, c: int) -> Graph:
    """Graph of ``Z^a * Z^b * Z^c``: three cliques named x1.., y1.., z1.."""
    names = {k: [f"{k}{i}" for i in range(1, n + 1)] for k, n in zip("xyz", (a, b, c))}
    edges = [(u, v) for cls in names.values() for i, u in enumerate(cls) for v in cls[i + 1:]]
    return Graph([v for k in "xyz" for v in names[k]], edges)


def _family_automorphism(h: Graph, fam: str, index: int) -> Automorphism:
    target, mult = fam[2].lower(), fam[4]
    members = [v for v in h.vertices if v[0] == mult]
    if index >= len(members):
        raise RepresentationError(f"index {index} outside class {mult.upper()}")
    support = frozenset(v for v in h.vertices if v[0] == target)
    return make_generator(h, PartialConjugation(members[index], support))


def _lift_coefficients(w: Word) -> dict:
    """Coefficient of ``(1-g) e_u`` in ``(1-g)`` times the lift of ``w`` from sheet 1.

    The lift of ``u`` from sheet ``s`` is the edge ``s e_u``; the lift of
    ``u^-1`` ending at ``s`` runs backwards along ``s g e_u``. In the group ring
    ``(1-g)(p + q g) = (p - q)(1-g)``.
    """
    coeff = {v: 0 for v in w.graph.vertices}
    sheet = 1  # +1 for the identity sheet, -1 for the g sheet
    for v, s in w.letters():
        if s > 0:
            coeff[v] += sheet
        else:
            coeff[v] -= -sheet
        sheet = -sheet
    return coeff


@dataclass(frozen=True)
class _ChainData:
    graph: Graph
    d1: sympy.Matrix       # C_1^- -> C_0^-
    d2_image: sympy.Matrix  # columns span the boundary image
    basis: sympy.Matrix    # columns e1, e2
    dims: dict = field(hash=False)


def _chain_data(a: int, b: int, c: int) -> _ChainData:
    h = salvetti_factor_graph(a, b, c)
    n = len(h)
    idx = h.index
    # (1-g)e_u has boundary (1-g)(g-1)v0 = -2 (1-g)v0
    d1 = sympy.Matrix([[-2] * n])
    cols = []
    for k in "xyz":
        cls = [v for v in h.vertices if v[0] == k]
        for u, v in zip(cls, cls[1:]):
            col = [0] * n
            col[idx[u]], col[idx[v]] = 1, -1
            cols.append(col)
    d2_image = sympy.Matrix(cols).T if cols else sympy.zeros(n, 0)
    if d2_image.shape[1] and not (d1 * d2_image).is_zero_matrix:
        raise RepresentationError("boundary maps do not compose to zero")
    e1 = [0] * n
    e2 = [0] * n
    e1[idx["x1"]], e1[idx["z1"]] = 1, -1
    e2[idx["y1"]], e2[idx["z1"]] = 1, -1
    basis = sympy.Matrix([e1, e2]).T
    kernel = d1.nullspace()
    image_rank = d2_image.rank() if d2_image.shape[1] else 0
    dims = {"c1_minus": n, "kernel": len(kernel), "image": image_rank,
            "quotient": len(kernel) - image_rank}
    if dims["quotient"] != 2:
        raise RepresentationError(f"eigenspace has dimension {dims['quotient']}, expected 2")
    if not (d1 * basis).is_zero_matrix:
        raise RepresentationError("basis vectors are not cycles")
    span = basis.row_join(d2_image) if d2_image.shape[1] else basis
    if span.rank() != image_rank + 2:
        raise RepresentationError("basis vectors are dependent modulo boundaries")
    return _ChainData(h, d1, d2_image, basis, dims)


def homology_dimensions(a: int, b: int, c: int) -> dict:
    return dict(_chain_data(a, b, c).dims)


def _coordinates(data: _ChainData, vec: sympy.Matrix) -> tuple:
    system = data.basis.row_join(data.d2_image) if data.d2_image.shape[1] else data.basis
    sol, params = system.gauss_jordan_solve(vec)
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    return sol[0], sol[1]


def homology_matrix_oracle(inp: HomologyRepInput, automorphism: Automorphism | None = None,
                           limit: int = ORACLE_SIZE_LIMIT) -> np.ndarray:
    """The action on ``V`` computed from the chain complex of the double cover.

    ``automorphism`` overrides the family in ``inp``; it must live on
    ``salvetti_factor_graph(a, b, c)`` and preserve the parity map.
    """
    if max(inp.sizes) > limit:
        raise RepresentationError(f"class sizes above the oracle limit {limit}")
    data = _chain_data(*inp.sizes)
    h = data.graph
    if automorphism is None:
        autos = [_family_automorphism(h, fam, inp.index) for fam in inp.families]
        automorphism = compose(*autos)
    elif automorphism.graph != h:
        raise RepresentationError("automorphism does not live on the factor graph")
    for v in h.vertices:
        if len(automorphism.image(v)) % 2 != 1:
            raise RepresentationError(f"image of {v} has even length; parity not preserved")
    z1 = Word.letter(h, "z1", -1)
    loops = [Word.letter(h, "x1") * z1, Word.letter(h, "y1") * z1]
    for loop, col in zip(loops, range(2)):
        base = _lift_coefficients(loop)
        expected = [base[v] for v in h.vertices]
        if list(data.basis[:, col]) != expected:
            raise RepresentationError("basis loop does not lift to the basis cycle")
    columns = []
    for loop in loops:
        coeff = _lift_coefficients(automorphism(loop))
        vec = sympy.Matrix([coeff[v] for v in h.vertices])
        if not (data.d1 * vec).is_zero_matrix:
            raise RepresentationError("image chain is not a cycle")
        columns.append(_coordinates(data, vec))
    m = sympy.Matrix(columns).T
    if any(not entry.is_integer for entry in m):
        raise RepresentationError(f"non-integral action {m.tolist()}")
    return np.array(m.tolist(), dtype=np.int64)


# -- freeness --------------------------------------------------------------------

@dataclass(frozen=True)
class FreenessCertificate:
    free: bool
    kind: str  # "sanov" | "no_short_relation" | "relation"
    detail: str = ""

    def __bool__(self):
        return self.free


def _unimodular(m) -> np.ndarray:
    m = np.asarray(m, dtype=np.int64)
    if m.shape != (2, 2):
        raise RepresentationError("expected a 2x2 matrix")
    if abs(_exact_det(m)) != 1:
        raise RepresentationError(f"matrix {m.tolist()} is not invertible over the integers")
    return m


def _sanov_parameter(m):
    """``("lower", k)`` if ``m = +-[[1,0],[k,1]]``, ``("upper", k)`` for the
    transpose shape, else None."""
    for s in (1, -1):
        p = s * m
        if p[0, 0] == 1 and p[1, 1] == 1:
            if p[0, 1] == 0:
                return "lower", int(p[1, 0])
            if p[1, 0] == 0:
                return "upper", int(p[0, 1])
    return None


def _inverse(m):
    d = int(round(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]))
    return d * np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=np.int64)


def ping_pong_free_check(m1, m2, word_bound: int = 4) -> FreenessCertificate:
    """Certify that ``m1, m2`` generate a free group of rank 2 in PGL(2, Z).

    The Sanov shape (one lower and one upper unipotent matrix up to sign, both
    off-diagonal entries of size at least 2) gives a full certificate.
    Otherwise every reduced word of length at most ``word_bound`` is checked
    against ``+-I``.
    """
    m1, m2 = _unimodular(m1), _unimodular(m2)
    s1, s2 = _sanov_parameter(m1), _sanov_parameter(m2)
    if s1 and s2 and {s1[0], s2[0]} == {"lower", "upper"} and min(abs(s1[1]), abs(s2[1])) >= 2:
        return FreenessCertificate(True, "sanov", f"parameters {s1[1]}, {s2[1]}")
    gens = [m1, _inverse(m1), m2, _inverse(m2)]
    names = ["A", "A^-1", "B", "B^-1"]
    eye = np.eye(2, dtype=np.int64)
    for length in range(1, word_bound + 1):
        for word in cartesian(range(4), repeat=length):
            if any(word[i] ^ 1 == word[i + 1] for i in range(length - 1)):
                continue
            m = eye
            for k in word:
                m = m @ gens[k]
            if np.array_equal(m, eye) or np.array_equal(m, -eye):
                return FreenessCertificate(False, "relation",
                                           " ".join(names[k] for k in word))
    return FreenessCertificate(True, "no_short_relation", f"no relation of length <= {word_bound}")


# -- largeness --------------------------------------------------------------------

@dataclass(frozen=True)
class ClassSize2:
    members: tuple
    kind: str

    def to_json(self):
        return {"type": "class_size_2", "class": list(self.members), "kind": self.kind}


@dataclass(frozen=True)
class NonAbelianClassSize3:
    members: tuple

    def to_json(self):
        return {"type": "non_abelian_class_size_3", "class": list(self.members)}


@dataclass(frozen=True)
class Case1:
    special: SpecialSil
    sizes: tuple
    generators: tuple  # names of the three partial conjugations on the factor graph
    matrices: tuple    # oracle matrices, sign normalised
    products: tuple    # sigma(C_X^y C_Y^z), sigma(C_Y^z C_Z^x)
    certificate: FreenessCertificate

    def to_json(self):
        return {"type": "case1", "sil": str(self.special.sil), "sizes": list(self.sizes),
                "generators": list(self.generators),
                "matrices": [m.tolist() for m in self.matrices],
                "products": [m.tolist() for m in self.products],
                "free": {"holds": self.certificate.free, "kind": self.certificate.kind}}


@dataclass(frozen=True)
class Case2Amalgam:
    special: SpecialSil
    a: int
    b: int

    def structure(self) -> dict:
        o1 = f"SL_{self.a}(Z) x SL_{self.b}(Z)"
        return {"splitting": "amalgam", "edge_group": o1,
                "vertex_groups": [f"({o1}) ⋉ Z^{self.a}", f"({o1}) ⋉ Z^{self.b}"],
                "finite_quotient": f"SL_{self.a}(Z/3) x SL_{self.b}(Z/3) with Z/3 coefficients",
                "conclusion": "finite quotient is virtually free and not virtually cyclic"}

    def to_json(self):
        return {"type": "case2_amalgam", "sil": str(self.special.sil), **self.structure()}


@dataclass(frozen=True)
class Case2HNN:
    special: SpecialSil
    a: int

    def structure(self) -> dict:
        return {"splitting": "hnn", "vertex_group": f"SL_{self.a}(Z) ⋉ (Z^{self.a} x Z^{self.a})",
                "edge_group": f"SL_{self.a}(Z) ⋉ Z^{self.a}",
                "embeddings": ["first Z^a factor", "second Z^a factor"],
                "conclusion": "finite quotient is virtually free and not virtually cyclic"}

    def to_json(self):
        return {"type": "case2_hnn", "sil": str(self.special.sil), **self.structure()}


def _case1(special: SpecialSil, sizes) -> Case1:
    h = salvetti_factor_graph(*sizes)
    inp = HomologyRepInput(*sizes)
    fams = {fam: _family_automorphism(h, fam, 0) for fam in FAMILIES}
    matrices = tuple(normalize_sign(homology_matrix_oracle(inp, fams[f])) for f in FAMILIES)
    p = homology_matrix_oracle(inp, compose(fams["C_X^y"], fams["C_Y^z"]))
    q = homology_matrix_oracle(inp, compose(fams["C_Y^z"], fams["C_Z^x"]))
    cert = ping_pong_free_check(p, q)
    return Case1(special, tuple(sizes), FAMILIES, matrices,
                 (normalize_sign(p), normalize_sign(q)), cert)


def largeness_witness(g: Graph):
    """Witness for one of the largeness criteria, or None.

    Order: a class of size two, a non-abelian class of size three, then a
    special SIL when every class is abelian.
    """
    order = equivalence_classes(g)
    for c in order.classes:
        if c.size == 2:
            return ClassSize2(c.members.as_tuple(), c.kind)
    for c in order.classes:
        if c.size == 3 and c.non_abelian:
            return NonAbelianClassSize3(c.members.as_tuple())
    if not all(c.is_abelian for c in order.classes) or not has_sil(g):
        return None
    special = find_special_sil(g)
    menu = sil_generator_menu(g, special)
    x, y, _ = special.sil.triple
    if menu.case1:
        return _case1(special, menu.sizes)
    if (y, x) in dominance_table(g):
        return Case2HNN(special, menu.sizes[0])
    return Case2Amalgam(special, menu.sizes[0], menu.sizes[1])
