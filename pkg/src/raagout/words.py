"""Exact arithmetic in the right-angled Artin group of a graph.

Letters are stored as integer codes ``2 * index + (0 if positive else 1)`` so
that code order is (declaration order, then sign) and inversion is ``code ^ 1``.
Normal forms are the lexicographically least representative of the
commutation class of a freely reduced word.
"""

from __future__ import annotations

from functools import lru_cache

from .graph_core import Graph, GraphError

__all__ = [
    "Word",
    "cyclically_reduce",
    "normal_form",
    "parse_word",
    "split_product",
    "words_equal",
]


@lru_cache(maxsize=4096)
def _commute_table(g: Graph) -> tuple:
    """``table[i]`` is the bitmask of vertex indices adjacent to vertex i."""
    return g.adjacency_masks


def _commutes(table, a: int, b: int) -> bool:
    """Letters commute iff their vertices are adjacent (distinct)."""
    return bool(table[a >> 1] >> (b >> 1) & 1)


def reduce_codes(table, codes) -> list:
    """Shuffle-cancel a code sequence into a reduced word (not canonical)."""
    out = []
    for c in codes:
        inv = c ^ 1
        j = len(out) - 1
        while j >= 0:
            d = out[j]
            if d == inv:
                del out[j]
                break
            if not _commutes(table, c, d):
                out.append(c)
                break
            j -= 1
        else:
            out.append(c)
    return out


def canonical_codes(table, codes) -> tuple:
    """Lexicographically least linearisation of a reduced word's heap."""
    rest = list(codes)
    out = []
    while rest:
        best = None
        best_pos = -1
        for i, c in enumerate(rest):
            if best is not None and c >= best:
                continue
            if all(_commutes(table, c, d) for d in rest[:i]):
                best, best_pos = c, i
        out.append(best)
        del rest[best_pos]
    return tuple(out)


def normal_codes(g: Graph, codes) -> tuple:
    table = _commute_table(g)
    return canonical_codes(table, reduce_codes(table, codes))


class Word:
    """An element of A_Gamma, always held in normal form."""

    __slots__ = ("graph", "codes")

    def __init__(self, graph: Graph, codes=(), _normal=False):
        self.graph = graph
        n = len(graph)
        codes = tuple(codes)
        for c in codes:
            if not 0 <= c >> 1 < n:
                raise GraphError(f"letter code {c} outside graph")
        self.codes = codes if _normal else normal_codes(graph, codes)

    # -- constructors ----------------------------------------------------
    @classmethod
    def letter(cls, graph: Graph, v, sign: int = 1) -> "Word":
        i = graph.index[graph.check_vertex(v)]
        return cls(graph, (2 * i + (0 if sign > 0 else 1),), _normal=True)

    @classmethod
    def identity(cls, graph: Graph) -> "Word":
        return cls(graph, (), _normal=True)

    @classmethod
    def from_letters(cls, graph: Graph, letters) -> "Word":
        """``letters`` is an iterable of ``(vertex, sign)`` pairs."""
        codes = []
        for v, s in letters:
            i = graph.index[graph.check_vertex(v)]
            codes.append(2 * i + (0 if s > 0 else 1))
        return cls(graph, codes)

    # -- group operations --------------------------------------------------
    def _check(self, other):
        if other.graph is not self.graph and other.graph != self.graph:
            raise GraphError("words live in different groups")

    def __mul__(self, other: "Word") -> "Word":
        self._check(other)
        return Word(self.graph, self.codes + other.codes)

    def inverse(self) -> "Word":
        return Word(self.graph, tuple(c ^ 1 for c in reversed(self.codes)))

    def __invert__(self):
        return self.inverse()

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(self.graph, base.codes * abs(n))

    def conjugate_by(self, g: "Word") -> "Word":
        """``g * self * g^-1``."""
        self._check(g)
        return Word(self.graph, g.codes + self.codes + tuple(c ^ 1 for c in reversed(g.codes)))

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.codes == other.codes and self.graph == other.graph

    def __hash__(self):
        return hash(self.codes)

    def __len__(self):
        return len(self.codes)

    def __bool__(self):
        return bool(self.codes)

    # -- views ---------------------------------------------------------------
    def letters(self) -> list:
        verts = self.graph.vertices
        return [(verts[c >> 1], -1 if c & 1 else 1) for c in self.codes]

    def support(self) -> frozenset:
        verts = self.graph.vertices
        return frozenset(verts[c >> 1] for c in self.codes)

    def exponent_sums(self) -> dict:
        sums = {v: 0 for v in self.graph.vertices}
        for v, s in self.letters():
            sums[v] += s
        return sums

    def __str__(self):
        if not self.codes:
            return "1"
        return " ".join(v if s > 0 else f"{v}^-1" for v, s in self.letters())

    def __repr__(self):
        return f"Word({str(self)!r})"


def normal_form(w: Word) -> Word:
    """Words are normalised on construction; this re-derives it from scratch."""
    return Word(w.graph, w.codes)


def words_equal(w1: Word, w2: Word) -> bool:
    if w1.graph != w2.graph:
        raise GraphError("words live in different groups")
    return w1.codes == w2.codes


def parse_word(g: Graph, text: str) -> Word:
    """Parse whitespace-separated letters ``a`` or ``a^-1`` (also ``a^n``)."""
    codes = []
    for tok in text.split():
        if tok == "1":
            continue
        name, _, exp = tok.partition("^")
        if name not in g:
            raise GraphError(f"unknown generator {name!r} in word")
        try:
            e = int(exp) if exp else 1
        except ValueError:
            raise GraphError(f"bad exponent in {tok!r}") from None
        i = g.index[name]
        codes.extend([2 * i + (0 if e > 0 else 1)] * abs(e))
    return Word(g, codes)


def _front_movable(table, codes) -> list:
    """Positions of letters that can be shuffled to the front."""
    out = []
    for i, c in enumerate(codes):
        if all(_commutes(table, c, d) for d in codes[:i]):
            out.append(i)
    return out


def _back_movable(table, codes) -> list:
    out = []
    for i, c in enumerate(codes):
        if all(_commutes(table, c, d) for d in codes[i + 1:]):
            out.append(i)
    return out


def cyclically_reduce(w: Word):
    """Return ``(core, conjugator)`` with ``w = conjugator * core * conjugator^-1``.

    Repeatedly strips a letter ``l`` that can move to the front while ``l^-1``
    can move to the back.
    """
    g = w.graph
    table = _commute_table(g)
    codes = list(w.codes)
    conj = []
    while True:
        fronts = _front_movable(table, codes)
        backs = {codes[j]: j for j in _back_movable(table, codes)}
        hit = None
        for i in fronts:
            j = backs.get(codes[i] ^ 1)
            if j is not None and j != i:
                hit = (i, j)
                break
        if hit is None:
            break
        i, j = hit
        conj.append(codes[i])
        codes = [c for k, c in enumerate(codes) if k not in (i, j)]
    return Word(g, codes), Word(g, conj)


def split_product(w: Word, left, right):
    """Decide ``w in A_left * A_right`` for vertex sets ``left``, ``right``.

    Returns ``(p, q)`` with ``w = p q``, ``p`` in ``A_left``, ``q`` in
    ``A_right``, or None. Peels the largest prefix of ``left``-letters off the
    heap of ``w``; ``w`` splits iff the remainder uses only ``right``-letters.
    """
    g = w.graph
    table = _commute_table(g)
    left_idx = {g.index[v] for v in left}
    right_idx = {g.index[v] for v in right}
    rest = list(w.codes)
    prefix = []
    progress = True
    while progress:
        progress = False
        for i in _front_movable(table, rest):
            if rest[i] >> 1 in left_idx:
                prefix.append(rest.pop(i))
                progress = True
                break
    if any(c >> 1 not in right_idx for c in rest):
        return None
    return Word(g, prefix), Word(g, rest)
