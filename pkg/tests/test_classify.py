import pytest

from raagout.automorphisms import PartialConjugation, TransvectionRight
from raagout.classify import (
    ClassifyError, condition_star, decompose_no_sil, depth_data, level_of, p_generating_set,
    report, trichotomy, vastness_report)
from raagout.corpus import corpus
from raagout.graph_core import complete_graph, discrete_graph
from raagout.sil import all_sils

from conftest import D2, D2_JOIN_K2, D3, K2, P3, P4
from test_representations import AMALGAM_GRAPH


def test_condition_star_examples():
    k2 = condition_star(K2)
    assert k2.holds and k2.witness["type"] == "abelian_class_size_2"
    assert not condition_star(P4)
    p3 = condition_star(P3)
    assert p3.holds and p3.witness == {"type": "non_abelian_class", "class": ["a", "c"]}
    assert condition_star(D3).witness["type"] == "sil"


def test_trichotomy_examples():
    for n in range(2, 6):
        c = trichotomy(discrete_graph(n))
        assert c.br1a["target"] == f"Out+(F_{n})"
    for n in range(1, 5):
        c = trichotomy(complete_graph(n))
        assert c.ses["blocks"] == [n] and not c.has_sil
    c = trichotomy(AMALGAM_GRAPH)
    assert c.br1b is not None and c.largeness is not None
    p3 = trichotomy(P3)
    # both flags are exposed: a free pair and no SIL
    assert p3.br1a and p3.ses and not p3.br2_strict


def test_vastness_examples():
    assert all(v["holds"] for v in vastness_report(D3).values())
    assert not any(v["holds"] for v in vastness_report(P4).values())
    assert all(v["holds"] for v in vastness_report(K2).values())


def test_decompose_no_sil_examples():
    d = decompose_no_sil(P4)
    assert d.k == 0 and d.lam == P4
    d = decompose_no_sil(D2)
    assert d.k == 1 and len(d.lam) == 0
    d = decompose_no_sil(D2_JOIN_K2)
    assert d.k == 1 and d.pairs == (("x", "y"),) and d.lam.vertices == ("u", "v")
    with pytest.raises(ClassifyError):
        decompose_no_sil(D3)


def test_depth_examples():
    assert depth_data(complete_graph(4)).K == 1
    p4 = depth_data(P4)
    assert p4.depth == {"a": 1, "b": 2, "c": 2, "d": 1} and p4.K == 2
    assert depth_data(P3).depth == {"a": 1, "b": 2, "c": 1}


def test_p_generating_set_examples():
    assert p_generating_set(complete_graph(3)) == []
    assert p_generating_set(D2) == []
    p4 = p_generating_set(P4)
    assert set(p4) == {TransvectionRight("a", "b"), TransvectionRight("a", "c"),
                       TransvectionRight("d", "b"), TransvectionRight("d", "c")}
    # the partial conjugations of P4 all act on the whole complement of a star
    assert not any(isinstance(k, PartialConjugation) for k in p4)
    with pytest.raises(ClassifyError):
        p_generating_set(D3)


def test_levels_are_graded_by_depth():
    data = depth_data(P4)
    assert data.level(1) == tuple(p_generating_set(P4))
    assert data.level(2) == ()
    assert all(level_of(P4, k) == 1 for k in p_generating_set(P4))


SIX = corpus(6)


def test_corpus_invariants():
    for g in SIX:
        c = trichotomy(g)
        assert c.star_condition.holds == bool(c.br1a or c.br1b)
        assert (not c.has_sil) == (c.ses is not None)
        assert c.star_condition.holds != c.br2_strict
        verdicts = {v["holds"] for v in c.vastness.values()}
        assert verdicts == {c.star_condition.holds}
        if not c.has_sil:
            d = decompose_no_sil(g)
            assert 2 * d.k + len(d.lam) == len(g)
        rep = report(c)
        assert set(rep) == {"graph", "classes", "sils", "special_sil", "star_condition",
                            "branches", "ses", "vastness", "largeness", "free_subgroup"}
        assert set(rep["vastness"]) == {"sq_universal", "involves_all_finite",
                                        "many_quasimorphisms_virtually", "not_boundedly_generated"}


def test_br1a_prefers_the_largest_class():
    from raagout.graph_core import Graph
    # a free class {p, q, r} and an abelian pair {u, v}, joined completely
    g = Graph(["u", "v", "p", "q", "r"],
              [("u", "v")] + [(a, b) for a in "uv" for b in "pqr"])
    assert trichotomy(g).br1a["n"] == 3


def test_no_sil_decomposition_over_seven_vertices():
    for g in corpus(7, min_vertices=7):
        if not all_sils(g):
            decompose_no_sil(g)
