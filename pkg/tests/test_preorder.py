import itertools

import pytest

from raagout.corpus import corpus
from raagout.graph_core import GraphError, complete_graph, discrete_graph, link, star
from raagout.preorder import dominance_table, dominates, equivalence_classes, gamma_leq
from raagout.sil import is_sil

from conftest import D3, K3, P3, P4

SMALL = corpus(6)


def test_dominates_examples():
    assert dominates(P3, "a", "b")
    assert not dominates(P3, "b", "a")
    for v in P4.vertices:
        assert dominates(P4, v, v)
    with pytest.raises(GraphError):
        dominates(P3, "a", "q")


def test_classes_of_named_graphs():
    order = equivalence_classes(P3)
    kinds = {c.members.as_tuple(): c.kind for c in order.classes}
    assert kinds == {("a", "c"): "free", ("b",): "singleton"}
    assert order.below(order.class_index("a"), order.class_index("b"))
    assert order.enumeration == ("a", "c", "b")

    for n in range(1, 6):
        kn = equivalence_classes(complete_graph(n)).classes
        assert len(kn) == 1 and kn[0].size == n
        assert kn[0].kind == ("singleton" if n == 1 else "abelian")
    for n in range(2, 6):
        dn = equivalence_classes(discrete_graph(n)).classes
        assert len(dn) == 1 and dn[0].kind == "free"


def test_gamma_leq_examples():
    assert gamma_leq(P3, {"b"}) == {"a", "b", "c"}
    assert gamma_leq(D3, {"x"}) == {"x", "y", "z"}
    assert gamma_leq(K3, {"v2"}) == set(K3.vertices)


def _brute_dominates(g, u, v):
    return all(w == v or g.adjacent(w, v) for w in g.neighbors(u))


@pytest.mark.parametrize("g", SMALL, ids=lambda g: " ".join(g.vertices) + "|" + str(len(g.edges)))
def test_preorder_properties(g):
    table = dominance_table(g)
    verts = g.vertices
    for u, v in itertools.product(verts, repeat=2):
        assert ((u, v) in table) == _brute_dominates(g, u, v)
    assert all((v, v) in table for v in verts)
    for u, v, w in itertools.product(verts, repeat=3):
        if (u, v) in table and (v, w) in table:
            assert (u, w) in table

    order = equivalence_classes(g)
    seen = [v for c in order.classes for v in c.members]
    assert sorted(seen) == sorted(verts)
    pos = {v: i for i, v in enumerate(order.enumeration)}
    for i, c in enumerate(order.classes):
        mem = c.members.as_tuple()
        assert c.size == len(mem) and (c.kind == "singleton") == (c.size == 1)
        pairs = list(itertools.combinations(mem, 2))
        if c.kind == "abelian":
            assert all(g.adjacent(a, b) for a, b in pairs)
            assert all(star(g, a) == star(g, b) for a, b in pairs)
        if c.kind == "free":
            assert not any(g.adjacent(a, b) for a, b in pairs)
            assert all(link(g, a) == link(g, b) for a, b in pairs)
        if c.kind == "free" and c.size >= 3:
            assert is_sil(g, *mem[:3]) is not None
        for j, d in enumerate(order.classes):
            if order.below(i, j):
                assert max(pos[v] for v in c.members) < min(pos[v] for v in d.members)
                assert not order.below(j, i)
    # equivalent vertices are consecutive in the enumeration
    idx = [order.class_index(v) for v in order.enumeration]
    assert idx == sorted(idx)

    for r in range(1, min(3, len(verts)) + 1):
        for s in itertools.combinations(verts, r):
            closed = gamma_leq(g, s)
            assert set(s) <= closed and gamma_leq(g, closed) == closed
