import pytest

from raagout.automorphisms import (
    PartialConjugation, TransvectionRight, commutator, equal_in_out, identity, inner_conjugator,
    make_generator, support_conjugation_inner_test)
from raagout.corpus import corpus
from raagout.graph_core import Graph
from raagout.verify import (
    SUITES, SuiteResult, corpus_consistency, free_witness, homology_oracle, ia_abelian,
    reduced_free_words, relations, shared_component, sil_lemmas, special_sil)

from conftest import D3, P4

# path e - a - b - c - d
P5 = Graph(["a", "b", "c", "d", "e"], [("e", "a"), ("a", "b"), ("b", "c"), ("c", "d")])


def test_reduced_word_count():
    assert len(reduced_free_words(4)) == 4 + 12 + 36 + 108 == 160


def test_suite_result_bookkeeping():
    r = SuiteResult("demo")
    r.check(True)
    r.check(False, where="here")
    assert not r.ok and r.checks == 2 and r.failures == [{"where": "here"}]
    assert r.summary().startswith("demo: FAIL (2 checks, 1 failures")
    assert r.merge(SuiteResult("other", 3)).checks == 5


def test_relation_one_literal_form_fails_when_left_side_is_inner():
    """With Y the whole complement of st(y), C^y_Y is inner, so the commutator is
    inner, but C^x_{Y - st(x)} need not be."""
    y, x = "d", "b"
    r = make_generator(P5, TransvectionRight(y, x))
    c = make_generator(P5, PartialConjugation(y, frozenset({"a", "b", "e"})))
    assert inner_conjugator(c) is not None
    lhs = commutator(r, c)
    assert inner_conjugator(lhs) is not None
    rhs = make_generator(P5, PartialConjugation(x, frozenset({"e"})))
    assert not support_conjugation_inner_test(P5, rhs)
    assert equal_in_out(lhs, identity(P5), 4).status == "equal"
    assert equal_in_out(lhs, rhs, 4).status != "equal"


def test_relations_suite_on_examples():
    res = relations([P4, P5])
    assert res.ok, res.failures
    assert res.notes["rel1_inner_case_literal_mismatch"] >= 1


SMALL = corpus(4)


@pytest.mark.parametrize("suite", [shared_component, sil_lemmas, special_sil, ia_abelian,
                                   relations, corpus_consistency])
def test_graph_suites_pass_on_small_corpus(suite):
    res = suite(SMALL)
    assert res.ok, res.failures[:3]
    assert res.checks > 0


def test_free_witness_on_d3():
    res = free_witness([D3])
    assert res.ok and res.checks == 3 * 160 and res.notes["unknown"] == 0


def test_homology_suite_small():
    res = homology_oracle(2)
    # one case per multiplier: sum of (a + b + c) over the eight size triples
    assert res.ok and res.notes["cases"] == 36


def test_suite_registry():
    assert set(SUITES) == {"shared-component", "sil-lemmas", "special-sil", "ia-abelian",
                           "relations", "free-witness", "homology-oracle"}
