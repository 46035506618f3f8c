import itertools

import pytest
from hypothesis import given, settings

from raagout.corpus import corpus
from raagout.graph_core import GraphError, VertexSet, parse_graph
from raagout.preorder import dominance_table, equivalence_classes
from raagout.sil import (
    Sil, SilError, SpecialSil, all_sils, component_of, find_special_sil, is_sil, is_special_sil, minimal_sils,
    shared_component_criterion, sil_generator_menu)

from conftest import ALL_ABELIAN_SIL, D3, K3, P4, STAR
from test_graph_core import graphs

# a SIL (a,b|e) whose classes are singletons but which is not special:
# f <= b, and g - st(f) puts a, b in one component and e in another
NOT_SPECIAL = parse_graph("vertices a b c d e f\nedges a-c b-c b-d d-f")


def test_component_of_examples():
    assert component_of(D3, "x", "z") == {"z"}
    assert component_of(STAR, "x", "z") == {"z"}
    assert component_of(P4, "b", "d") == {"d"}
    with pytest.raises(GraphError):
        component_of(P4, "b", "a")


def test_is_sil_examples():
    s = is_sil(D3, "x", "y", "z")
    assert s is not None and s.component_z == {"z"}
    assert is_sil(STAR, "x", "y", "z").component_z == {"z"}
    assert all(is_sil(P4, *t) is None for t in itertools.permutations(P4.vertices, 3))
    with pytest.raises(SilError):
        is_sil(D3, "x", "x", "z")


def test_all_sils_examples():
    assert [str(s) for s in all_sils(D3)] == ["(x,y|z)", "(x,z|y)", "(y,z|x)"]
    assert all_sils(K3) == [] and all_sils(P4) == []


def test_special_examples():
    # D3 is one free class of size three, so no SIL of it is special
    assert is_special_sil(D3, is_sil(D3, "x", "y", "z")) is None
    assert is_special_sil(STAR, is_sil(STAR, "x", "y", "z")) is None
    assert is_special_sil(NOT_SPECIAL, is_sil(NOT_SPECIAL, "a", "b", "e")) is None
    with pytest.raises(SilError):
        is_special_sil(P4, Sil("a", "c", "d", VertexSet(P4, {"d"})))


def test_find_special_sil_preconditions():
    with pytest.raises(SilError):
        find_special_sil(D3)
    assert find_special_sil(K3) is None
    special = find_special_sil(NOT_SPECIAL)
    assert special is not None and is_special_sil(NOT_SPECIAL, special.sil) is not None


def test_menu_on_all_abelian_example():
    special = find_special_sil(ALL_ABELIAN_SIL)
    menu = sil_generator_menu(ALL_ABELIAN_SIL, special)
    assert menu.sizes == (2, 2, 2)
    assert len(menu.sil_automorphisms) == 4
    assert len(menu.internal_transvections) == 12
    assert menu.case1 and len(menu.extra_partial_conjugations) == 2
    assert not menu.y_to_x_transvections and not menu.z_to_x_transvections


def test_menu_rejects_unnormalised_or_non_special():
    g = parse_graph("vertices a b c d e\nedges a-e c-d d-e")
    s = is_sil(g, "a", "d", "b")
    with pytest.raises(SilError):
        sil_generator_menu(g, SpecialSil(s, (), VertexSet(g), VertexSet(g)))


def _brute_special(g, s):
    table = dominance_table(g)
    order = equivalence_classes(g)
    classes = [order.class_of(v) for v in s.triple]
    if not all(c.is_abelian for c in classes):
        return False
    gs = set().union(*(c.members for c in classes))
    below = {u for u in g.vertices if any((u, v) in table for v in s.triple)}
    for u in below - gs:
        if any((s.triple[i], u) in table and (u, s.triple[j]) in table
               for i in range(3) for j in range(3) if i != j):
            return False
        st = {u} | set(g.neighbors(u))
        rest = set(g.vertices) - st
        # flood fill from each x_i not in st(u)
        outside = [v for v in s.triple if v not in st]
        if outside:
            seen, todo = {outside[0]}, [outside[0]]
            while todo:
                a = todo.pop()
                for b in g.neighbors(a):
                    if b in rest and b not in seen:
                        seen.add(b)
                        todo.append(b)
            if not all(v in seen for v in outside):
                return False
    return True


@pytest.mark.parametrize("n", range(3, 7))
def test_special_sil_and_menu_over_corpus(n):
    for g in corpus(n, min_vertices=n):
        table = dominance_table(g)
        for s in all_sils(g):
            assert (is_special_sil(g, s) is not None) == _brute_special(g, s)
        if not all(c.is_abelian for c in equivalence_classes(g).classes):
            continue
        special = find_special_sil(g)
        assert (special is None) == (not all_sils(g))
        if special is None:
            continue
        x, y, z = special.sil.triple
        assert (x, z) not in table and (y, z) not in table and (x, y) not in table
        assert special.sil in minimal_sils(g) or is_sil(g, x, y, z) is not None
        menu = sil_generator_menu(g, special)
        assert menu.sil_automorphisms
        assert bool(menu.y_to_x_transvections) == ((y, x) in table)
        assert bool(menu.z_to_x_transvections) == ((z, x) in table)
        assert bool(menu.z_to_y_transvections) == ((z, y) in table)
        a, b, c = menu.sizes
        assert len(menu.internal_transvections) == 2 * (a * (a - 1) + b * (b - 1) + c * (c - 1))


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_definition_matches_shared_component(g):
    for x, y, z in itertools.permutations(g.vertices, 3):
        assert (is_sil(g, x, y, z) is not None) == shared_component_criterion(g, x, y, z)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_sil_invariants(g):
    for s in all_sils(g):
        assert not any(g.adjacent(a, b) for a, b in itertools.combinations(s.triple, 2))
        assert s.z in s.component_z and s.x not in s.component_z and s.y not in s.component_z
        assert is_sil(g, s.y, s.x, s.z) is not None
