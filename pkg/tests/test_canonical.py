import random

from hypothesis import given, settings, strategies as st

from oracles import brute_canon, brute_isomorphic, random_graph, shuffle_labels
from vcrit.canonical import OrderedPartition, are_isomorphic, canonical_form, canonical_graph, refine
from vcrit.graph import complete, cycle, cycle_complement, path, petersen, to_graph6, wheel4


def cell_sizes(p):
    return [c.bit_count() for c in p.cells]


def test_refine_examples():
    assert cell_sizes(refine(cycle(5))) == [5]
    w4 = refine(wheel4())
    assert [sorted(c) for c in w4.as_lists()] == [[0, 1, 2, 3], [4]]
    assert sorted(cell_sizes(refine(path(5)))) == [1, 2, 2]


def equitable(g, p):
    for cell in p.cells:
        for other in p.cells:
            counts = {(g.adj[v] & other).bit_count() for v in range(g.n) if cell >> v & 1}
            if len(counts) > 1:
                return False
    return True


def is_refinement(fine, coarse):
    return all(any(f & ~c == 0 for c in coarse.cells) for f in fine.cells)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**31), st.integers(1, 12), st.floats(0.1, 0.9))
def test_refine_properties(seed, n, p):
    rng = random.Random(seed)
    g = random_graph(rng, n, p)
    start = OrderedPartition.from_lists([[v for v in range(n) if v % 2 == 0], [v for v in range(n) if v % 2]]) \
        if n > 1 else OrderedPartition.unit(n)
    r = refine(g, start)
    assert r.is_valid_for(n)
    assert equitable(g, r)
    assert is_refinement(r, start)
    assert refine(g, r) == r


def test_canonical_distinguishes_small_graphs(small_graphs):
    forms = {canonical_form(g).canon_g6 for g in small_graphs}
    assert len(forms) == len(small_graphs) == 208


def test_canonical_agrees_with_permutation_oracle_on_labelled_graphs():
    # every labelled graph on 5 vertices, grouped by the two notions of class
    g_by_ours, g_by_oracle = {}, {}
    from vcrit.graph import Graph

    n = 5
    pairs = [(i, j) for j in range(n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        g = Graph(n, adj)
        g_by_ours.setdefault(canonical_form(g).canon_g6, set()).add(mask)
        g_by_oracle.setdefault(brute_canon(g), set()).add(mask)
    assert sorted(map(sorted, g_by_ours.values())) == sorted(map(sorted, g_by_oracle.values()))
    assert len(g_by_ours) == 34


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**31), st.integers(0, 14), st.floats(0.0, 1.0))
def test_permutation_invariance(seed, n, p):
    rng = random.Random(seed)
    g = random_graph(rng, n, p)
    h = shuffle_labels(rng, g)
    assert canonical_form(g).canon_g6 == canonical_form(h).canon_g6


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**31), st.integers(0, 12), st.floats(0.0, 1.0))
def test_perm_reproduces_form(seed, n, p):
    g = random_graph(random.Random(seed), n, p)
    cf = canonical_form(g)
    assert sorted(cf.perm) == list(range(n))
    assert to_graph6(g.permute(cf.perm)) == cf.canon_g6
    assert to_graph6(canonical_graph(g)) == cf.canon_g6


def test_symmetric_graphs():
    rng = random.Random(5)
    for g in (petersen(), cycle_complement(9), complete(8), cycle(12), complete(4).disjoint_union(complete(4))):
        ref = canonical_form(g).canon_g6
        for _ in range(10):
            assert canonical_form(shuffle_labels(rng, g)).canon_g6 == ref


def test_isomorphism_examples():
    rng = random.Random(1)
    c7bar = cycle_complement(7)
    assert are_isomorphic(c7bar, shuffle_labels(rng, c7bar))
    assert not are_isomorphic(complete(5), cycle(5))
    assert canonical_form(complete(4)).canon_g6 != canonical_form(cycle(4)).canon_g6
    assert not are_isomorphic(path(5), path(4).disjoint_union(complete(1)))


def test_are_isomorphic_matches_bruteforce():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, rng.random())
        if rng.random() < 0.5:
            h = shuffle_labels(rng, g)
        else:
            h = random_graph(rng, n, g.num_edges() / max(1, n * (n - 1) / 2))
        assert are_isomorphic(g, h) == brute_isomorphic(g, h)
    # pairs with equal degree sequences but different structure
    g = cycle(6)
    h = complete(3).disjoint_union(complete(3))
    assert not are_isomorphic(g, h) and not brute_isomorphic(g, h)


def test_catalog_permutation_invariance(crit21):
    rng = random.Random(11)
    for g in crit21:
        ref = canonical_form(g).canon_g6
        for _ in range(20):
            assert canonical_form(shuffle_labels(rng, g)).canon_g6 == ref
