import random

import pytest

from oracles import all_subgraphs, brute_chromatic, proper_colorable_numpy, random_graph
from vcrit.color import chromatic_number, is_k_colorable
from vcrit.critical import (
    Kind, NotHFree, SizeLimit, check_homogeneous_criticality, closure, find_comparable_pair, find_xy_obstruction,
    homogeneous_sets, is_homogeneous, is_k_critical_classical, is_k_critical_hfree, is_k_vertex_critical,
    neighborhood,
)
from vcrit.detect import P5, W4, is_free
from vcrit.graph import Graph, bits, complete, cycle, cycle_complement, from_edge_list, path, wheel4


def test_vertex_critical_examples():
    assert is_k_vertex_critical(complete(5), 5).kind is Kind.VERTEX_CRITICAL
    assert is_k_vertex_critical(cycle_complement(7), 4).passed
    r = is_k_vertex_critical(wheel4(), 4)
    assert r.kind is Kind.NOT_CRITICAL and r.chi == 3 and r.witness.is_proper(wheel4())


def test_classical_examples():
    assert is_k_critical_classical(cycle(5), 3).kind is Kind.CRITICAL_CLASSICAL
    assert is_k_critical_classical(complete(5), 5).passed
    g = cycle(5).disjoint_union(Graph(1))
    r = is_k_critical_classical(g, 3)
    assert not r.passed and r.witness == 5
    # vertex-critical but not critical: C7bar loses nothing when some edges go
    c7bar = cycle_complement(7)
    r = is_k_critical_classical(c7bar, 4)
    assert not r.passed and isinstance(r.witness, tuple)
    assert is_k_colorable(c7bar.delete_edge(*r.witness), 3) is None


def test_hfree_examples(crit21):
    assert is_k_critical_hfree(cycle(5), 3, [P5]).kind is Kind.CRITICAL_HFREE
    assert is_k_critical_hfree(crit21[0], 5, [P5, W4]).passed
    with pytest.raises(NotHFree):
        is_k_critical_hfree(path(5), 2, [P5])


def test_hfree_witness_is_free_and_k_chromatic(full64):
    failing = 0
    for g in full64:
        r = is_k_critical_hfree(g, 5, [P5, W4])
        if not r.passed:
            failing += 1
            s = r.witness
            assert s != g and s.n <= g.n and s.num_edges() <= g.num_edges()
            assert is_free(s, [P5, W4])[0]
            assert chromatic_number(s)[0] >= 5
        assert is_k_vertex_critical(g, 5).passed
    assert failing == 43


def brute_hfree_critical(g, k, patterns):
    if not proper_colorable_numpy(g, k) or proper_colorable_numpy(g, k - 1):
        return False
    full_edges = g.num_edges()
    for s in all_subgraphs(g):
        if s.n == g.n and s.num_edges() == full_edges:
            continue
        if s.n >= k and not proper_colorable_numpy(s, k - 1) and is_free(s, patterns)[0]:
            return False
    return True


@pytest.mark.parametrize("patterns", [[path(4)], [cycle(4), path(4)], [complete(1).disjoint_union(path(3))], []],
                         ids=["P4", "C4+P4", "K1+P3", "none"])
def test_hfree_matches_subgraph_enumeration(small_graphs, patterns):
    rng = random.Random(2)
    hosts = [g for g in small_graphs if g.num_edges() <= 10]
    hosts += [random_graph(rng, 7, 0.4) for _ in range(15)]
    checked = 0
    for g in hosts:
        if g.num_edges() > 11 or not is_free(g, patterns)[0]:
            continue
        k = brute_chromatic(g)
        if k < 2:
            continue
        for level in (k, k + 1):
            ours = is_k_critical_hfree(g, level, patterns).passed
            assert ours == brute_hfree_critical(g, level, patterns), (g, level)
        checked += 1
    assert checked > 20


def test_implication_chain(small_graphs):
    for g in small_graphs:
        k = chromatic_number(g)[0]
        classical = is_k_critical_classical(g, k).passed
        hfree = is_k_critical_hfree(g, k, []).passed
        vertex = is_k_vertex_critical(g, k).passed
        assert classical <= hfree <= vertex
        assert classical == hfree  # no patterns: every subgraph is H-free


def test_failure_witness_recomputes(small_graphs):
    for g in small_graphs:
        k = chromatic_number(g)[0]
        r = is_k_vertex_critical(g, k)
        if not r.passed:
            assert chromatic_number(g.delete_vertex(r.witness))[0] == k
        r = is_k_vertex_critical(g, k + 1)
        assert not r.passed and r.witness.is_proper(g) and r.chi == k


def test_comparable_pair_examples(crit21):
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    x, y = find_comparable_pair(star)
    assert {x, y} <= {1, 2, 3}
    assert find_comparable_pair(cycle(5)) is None
    for g in crit21:
        assert find_comparable_pair(g) is None


def test_vertex_critical_has_no_comparable_pair(small_graphs):
    for g in small_graphs:
        if is_k_vertex_critical(g, chromatic_number(g)[0]).passed:
            assert find_comparable_pair(g) is None


def test_xy_examples():
    g = complete(3).disjoint_union(Graph(1))
    x, y = find_xy_obstruction(g)
    assert x & y == 0 and x and y
    assert find_xy_obstruction(cycle(5)) is None
    with pytest.raises(SizeLimit):
        find_xy_obstruction(cycle(5), 5)


def test_xy_hit_conditions_and_soundness():
    rng = random.Random(6)
    for _ in range(120):
        g = random_graph(rng, rng.randint(2, 8), rng.random())
        hit = find_xy_obstruction(g, 2)
        if hit is None:
            continue
        x, y = hit
        assert x & y == 0
        assert not any(g.adj[v] & y for v in bits(x))
        assert all(g.adj[v] & y == y for v in bits(neighborhood(g, x)))
        assert chromatic_number(g.induced_subgraph(x))[0] <= chromatic_number(g.induced_subgraph(y))[0]
        assert not is_k_vertex_critical(g, chromatic_number(g)[0]).passed


def test_lemmas_on_catalog(full64):
    for g in full64:
        assert find_comparable_pair(g) is None
        assert find_xy_obstruction(g, 2) is None
        assert check_homogeneous_criticality(g, 5).holds


def test_homogeneous_examples():
    g = complete(2).join(complete(2))
    assert is_homogeneous(g, 0b0011) and is_homogeneous(g, 0b1100)
    assert homogeneous_sets(g) == sorted(m for m in range(16) if m.bit_count() == 3)
    assert homogeneous_sets(cycle(5)) == []
    g = complete(3).disjoint_union(Graph(1)).join(path(2))
    assert closure(g, 0b1001) == 0b1111
    assert is_homogeneous(g, 0b1111)
    assert any(h & 0b1111 == 0b1111 for h in homogeneous_sets(g))


def brute_maximal_homogeneous(g):
    full = g.vertex_mask
    homog = [m for m in range(1, full) if m.bit_count() >= 2 and is_homogeneous(g, m)]
    return sorted(m for m in homog if not any(o != m and o & m == m for o in homog))


def test_homogeneous_sets_match_exhaustive(small_graphs):
    for g in small_graphs:
        if g.n >= 3:
            assert homogeneous_sets(g) == brute_maximal_homogeneous(g)
