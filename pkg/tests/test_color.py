import random

import pytest

from oracles import brute_chromatic, proper_colorable_numpy, random_graph
from vcrit.color import Coloring, chromatic_number, is_k_colorable
from vcrit.detect import clique_number
from vcrit.graph import Graph, complete, cycle, cycle_complement, wheel4


def test_examples():
    c5 = cycle(5)
    assert is_k_colorable(c5, 2) is None
    assert is_k_colorable(c5, 3).is_proper(c5)
    assert is_k_colorable(wheel4(), 3) is not None
    c7bar = cycle_complement(7)
    assert is_k_colorable(c7bar, 3) is None
    assert is_k_colorable(c7bar, 4) is not None
    assert not proper_colorable_numpy(c7bar, 3) and proper_colorable_numpy(c7bar, 4)
    assert chromatic_number(complete(5))[0] == 5
    assert chromatic_number(complete(3).disjoint_union(cycle(5)))[0] == 3
    assert chromatic_number(Graph(0))[0] == 0


def test_edge_cases():
    with pytest.raises(ValueError):
        is_k_colorable(cycle(5), -1)
    assert is_k_colorable(Graph(3), 0) is None
    assert is_k_colorable(Graph(0), 0) is not None
    assert is_k_colorable(Graph(3), 1).colors == (0, 0, 0)


def test_coloring_validation():
    c5 = cycle(5)
    assert not Coloring((0, 0, 1, 0, 1), 2).is_proper(c5)
    assert not Coloring((0, 1, 0, 1, 3), 3).is_proper(c5)
    assert Coloring((0, 1, 0, 1, 2), 3).is_proper(c5)


def test_critical_graphs_are_five_chromatic(crit21):
    for g in crit21:
        k, col = chromatic_number(g)
        assert k == 5 and col.is_proper(g)


def test_matches_exhaustive_oracle(small_graphs):
    for g in small_graphs:
        k, col = chromatic_number(g)
        assert k == brute_chromatic(g)
        assert col.is_proper(g) and col.k == k


def test_monotone_under_vertex_deletion():
    rng = random.Random(8)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 11), rng.random())
        k = chromatic_number(g)[0]
        assert clique_number(g)[0] <= k <= g.n
        for v in range(g.n):
            assert chromatic_number(g.delete_vertex(v))[0] in (k, k - 1)
