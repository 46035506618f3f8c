"""The atlas-backed corpus against an independent brute-force enumeration."""

import itertools

import networkx as nx
import pytest

from raagout.corpus import MAX_CORPUS_VERTICES, corpus, from_networkx, to_networkx

KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def _canonical(n, edges):
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or key < best:
            best = key
    return best


def brute_force_classes(n):
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        seen.add(_canonical(n, edges))
    return seen


@pytest.mark.parametrize("n", range(1, 6))
def test_counts_match_brute_force(n):
    graphs = corpus(n, min_vertices=n)
    assert len(graphs) == len(brute_force_classes(n)) == KNOWN_COUNTS[n]
    keys = {_canonical(n, [(g.index[a], g.index[b]) for a, b in g.sorted_edges()]) for g in graphs}
    assert len(keys) == len(graphs)


def test_cumulative_counts():
    assert len(corpus(3)) == 7
    assert len(corpus(5)) == 52
    assert len(corpus(6)) == 208
    assert len(corpus(7)) == 1252
    assert len(corpus(7, min_vertices=6)) == KNOWN_COUNTS[6] + KNOWN_COUNTS[7]


def test_no_isomorphic_duplicates_at_six_and_seven():
    for n in (6, 7):
        graphs = [to_networkx(g) for g in corpus(n, min_vertices=n)]
        by_invariant = {}
        for h in graphs:
            by_invariant.setdefault(nx.weisfeiler_lehman_graph_hash(h), []).append(h)
        for bucket in by_invariant.values():
            for a, b in itertools.combinations(bucket, 2):
                assert not nx.is_isomorphic(a, b)


def test_cap_and_round_trip():
    with pytest.raises(ValueError):
        corpus(MAX_CORPUS_VERTICES + 1)
    with pytest.raises(ValueError):
        corpus(0)
    for g in corpus(4):
        assert from_networkx(to_networkx(g)) == g
