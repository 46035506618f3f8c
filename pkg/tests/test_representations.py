import itertools
import random

import numpy as np
import pytest
import sympy

from raagout.automorphisms import (
    CommutatorTransvection, Inversion, PartialConjugation, TransvectionLeft, TransvectionRight,
    compose, identity, make_generator, out0_generators, partial_conjugations, transvections)
from raagout.corpus import corpus
from raagout.graph_core import complete_graph, parse_graph
from raagout.representations import (
    FAMILIES, Case1, Case2Amalgam, Case2HNN, ClassSize2, HomologyRepInput, NonAbelianClassSize3,
    RepresentationError, block_mask, check_block_structure, day_generating_set,
    homology_dimensions, homology_matrix_closed_form, homology_matrix_oracle, is_torelli,
    largeness_witness, normalize_sign, ping_pong_free_check, salvetti_factor_graph,
    standard_matrix)
from raagout.sil import all_sils

from conftest import D3, K2, P3, P4, STAR

CASE1_GRAPH = parse_graph("vertices a b c d e f g\nedges a-d a-e c-f c-g d-e f-g")
HNN_GRAPH = parse_graph("vertices a b c d e f\nedges a-b b-c b-d c-e d-f")
AMALGAM_GRAPH = parse_graph("vertices a b c d e\nedges a-e c-d d-e")

# the five displayed matrices for a = b = c = 1
EXPECTED = {
    ("C_X^y",): [[-1, 0], [2, 1]],
    ("C_Y^z",): [[1, 0], [0, -1]],
    ("C_Z^x",): [[-1, -2], [0, 1]],
    ("C_X^y", "C_Y^z"): [[-1, 0], [2, -1]],
    ("C_Y^z", "C_Z^x"): [[-1, -2], [0, -1]],
}


def test_standard_matrix_examples():
    assert np.array_equal(standard_matrix(P4, identity(P4)), np.eye(4, dtype=np.int64))
    m = standard_matrix(P3, make_generator(P3, TransvectionRight("a", "b")))
    # enumeration (a, c, b): the extra 1 sits in row b, column a
    expected = np.eye(3, dtype=np.int64)
    expected[2, 0] = 1
    assert np.array_equal(m, expected)
    for k in partial_conjugations(P4) + partial_conjugations(D3):
        g = P4 if k.multiplier in P4 else D3
        assert is_torelli(g, make_generator(g, k))


def test_block_structure_examples():
    for k in out0_generators(P4):
        assert check_block_structure(P4, standard_matrix(P4, make_generator(P4, k)))
    bad = np.eye(4, dtype=np.int64)
    order = ("a", "d", "b", "c")
    bad[order.index("a"), order.index("b")] = 1  # b is not below a
    assert not block_mask(P4)[order.index("a"), order.index("b")]
    assert not check_block_structure(P4, bad)
    inv = standard_matrix(P4, make_generator(P4, Inversion("a")))
    assert not check_block_structure(P4, inv)
    with pytest.raises(RepresentationError):
        check_block_structure(P4, np.eye(3))


def test_torelli_examples():
    for k in transvections(P4):
        assert not is_torelli(P4, make_generator(P4, k))
    assert is_torelli(D3, make_generator(D3, CommutatorTransvection("x", "y", "z")))


@pytest.mark.parametrize("g", [P3, P4, D3, STAR, complete_graph(3), CASE1_GRAPH],
                         ids=["P3", "P4", "D3", "STAR", "K3", "case1"])
def test_standard_representation_properties(g):
    rng = random.Random(len(g.edges) + 11 * len(g))
    gens = [make_generator(g, k) for k in out0_generators(g)]
    for f in gens:
        assert check_block_structure(g, standard_matrix(g, f))
    for v in g.vertices:
        assert sympy.Matrix(standard_matrix(g, make_generator(g, Inversion(v))).tolist()).det() == -1
    for _ in range(1000):
        f, h = compose(*rng.choices(gens, k=rng.randint(1, 3))), rng.choice(gens)
        sf, sh = standard_matrix(g, f), standard_matrix(g, h)
        fh = compose(f, h)
        assert np.array_equal(standard_matrix(g, fh), sf @ sh)
        assert is_torelli(g, fh) == np.array_equal(sf @ sh, np.eye(len(g), dtype=np.int64))


def test_day_set_examples():
    p4 = {(k.multiplier, frozenset(k.support)) for k in day_generating_set(P4)}
    assert p4 == {("b", frozenset("d")), ("c", frozenset("a")),
                  ("a", frozenset("cd")), ("d", frozenset("ab"))}
    assert day_generating_set(complete_graph(4)) == []
    d3 = day_generating_set(D3)
    assert sum(isinstance(k, PartialConjugation) for k in d3) == 6
    assert CommutatorTransvection("x", "y", "z") in d3


def test_day_set_has_no_commutator_transvections_without_sil():
    for g in corpus(6):
        if not all_sils(g):
            assert not any(isinstance(k, CommutatorTransvection) for k in day_generating_set(g))


@pytest.mark.parametrize("gens,expected", EXPECTED.items(), ids=["/".join(k) for k in EXPECTED])
def test_closed_form_matches_displayed_matrices(gens, expected):
    inp = HomologyRepInput(1, 1, 1, gens if len(gens) > 1 else gens[0])
    m = homology_matrix_closed_form(inp)
    assert np.array_equal(normalize_sign(m), normalize_sign(expected))
    assert np.array_equal(m, np.array(expected))
    assert np.array_equal(homology_matrix_oracle(inp), np.array(expected))


@pytest.mark.parametrize("sizes", list(itertools.product((1, 2, 3), repeat=3)), ids=str)
def test_oracle_matches_closed_form(sizes):
    a, b, c = sizes
    dims = homology_dimensions(a, b, c)
    assert dims["c1_minus"] == a + b + c
    assert dims["image"] == a + b + c - 3
    assert dims["quotient"] == 2
    for fam in FAMILIES:
        inp = HomologyRepInput(a, b, c, fam)
        assert np.array_equal(normalize_sign(homology_matrix_oracle(inp)),
                              normalize_sign(homology_matrix_closed_form(inp)))
    assert np.array_equal(normalize_sign(homology_matrix_oracle(HomologyRepInput(a, b, c, FAMILIES))),
                          normalize_sign(homology_matrix_closed_form(HomologyRepInput(a, b, c, FAMILIES))))


def test_oracle_on_mixed_sizes_and_errors():
    inp = HomologyRepInput(2, 3, 1, "C_X^y", index=2)
    assert np.array_equal(normalize_sign(homology_matrix_oracle(inp)),
                          normalize_sign(homology_matrix_closed_form(inp)))
    with pytest.raises(RepresentationError):
        HomologyRepInput(0, 1, 1)
    with pytest.raises(RepresentationError):
        HomologyRepInput(1, 1, 1, "C_Q^x")
    with pytest.raises(RepresentationError):
        homology_matrix_oracle(HomologyRepInput(6, 1, 1))
    h = salvetti_factor_graph(2, 1, 1)
    with pytest.raises(RepresentationError):
        # internal transvection x1 -> x1 x2 changes parity
        homology_matrix_oracle(HomologyRepInput(2, 1, 1), make_generator(h, TransvectionLeft("x1", "x2")))


def test_normalize_sign():
    assert normalize_sign([[0, -1], [1, 0]]).tolist() == [[0, 1], [-1, 0]]
    assert normalize_sign([[0, 0], [0, 0]]).tolist() == [[0, 0], [0, 0]]


def test_ping_pong_examples():
    cert = ping_pong_free_check([[-1, 0], [2, -1]], [[-1, -2], [0, -1]])
    assert cert.free and cert.kind == "sanov"
    same = ping_pong_free_check([[1, 1], [0, 1]], [[1, 1], [0, 1]])
    assert not same.free and same.kind == "relation"
    assert not ping_pong_free_check([[1, 1], [0, 1]], [[1, 2], [0, 1]], word_bound=4).free
    with pytest.raises(RepresentationError):
        ping_pong_free_check([[2, 0], [0, 1]], [[1, 0], [0, 1]])


def test_largeness_witness_examples():
    assert isinstance(largeness_witness(K2), ClassSize2)
    assert isinstance(largeness_witness(D3), NonAbelianClassSize3)
    assert largeness_witness(P4) is None
    case1 = largeness_witness(CASE1_GRAPH)
    assert isinstance(case1, Case1) and case1.certificate.kind == "sanov"
    assert case1.sizes == (3, 3, 1)
    for m, fam in zip(case1.matrices, FAMILIES):
        assert np.array_equal(m, normalize_sign(EXPECTED[(fam,)]))
    assert isinstance(largeness_witness(HNN_GRAPH), Case2HNN)
    assert isinstance(largeness_witness(AMALGAM_GRAPH), Case2Amalgam)
    assert largeness_witness(AMALGAM_GRAPH).to_json()["splitting"] == "amalgam"
