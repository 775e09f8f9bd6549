"""Slow, independent reference implementations and random samplers used by the tests."""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Sequence

import numpy as np

from vcrit.detect import is_free
from vcrit.graph import Graph, from_edge_list


def pair_index(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(n) for i in range(j)]


def brute_canon(g: Graph) -> tuple:
    """Lexicographically least adjacency bit string over all n! relabellings."""
    n = g.n
    pairs = pair_index(n)
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for v, p in enumerate(perm):
            inv[p] = v
        code = tuple(int(g.has_edge(inv[i], inv[j])) for i, j in pairs)
        if best is None or code < best:
            best = code
    return (n, best)


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    target = tuple(int(h.has_edge(i, j)) for i, j in pair_index(h.n))
    for perm in itertools.permutations(range(g.n)):
        code = tuple(int(g.has_edge(perm[i], perm[j])) for i, j in pair_index(g.n))
        if code == target:
            return True
    return False


def all_graphs_bruteforce(max_n: int) -> list[Graph]:
    """One representative per isomorphism class, deduplicated by :func:`brute_canon` only."""
    out = [Graph(0)]
    level = [Graph(0)]
    for n in range(1, max_n + 1):
        seen: dict[tuple, Graph] = {}
        for g in level:
            for mask in range(1 << g.n):
                h = g.add_vertex(mask)
                key = brute_canon(h)
                if key not in seen:
                    seen[key] = h
        level = list(seen.values())
        out.extend(level)
    return out


def proper_colorable_numpy(g: Graph, k: int) -> bool:
    """Literal enumeration of all k^n colour assignments (vectorised)."""
    n = g.n
    if n == 0:
        return True
    if k == 0:
        return False
    total = k ** n
    edges = g.edges()
    chunk = 1 << 20
    for start in range(0, total, chunk):
        codes = np.arange(start, min(total, start + chunk), dtype=np.int64)
        cols = [(codes // (k ** v)) % k for v in range(n)]
        ok = np.ones(len(codes), dtype=bool)
        for u, v in edges:
            ok &= cols[u] != cols[v]
        if ok.any():
            return True
    return False


def restricted_growth_colorable(g: Graph, k: int) -> bool:
    """Enumeration of all partitions of V into at most k labelled-by-first-use classes."""
    n = g.n
    if n == 0:
        return True
    cols = [0] * n

    def rec(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(min(used + 1, k)):
            if all(cols[u] != c for u in range(v) if g.has_edge(u, v)):
                cols[v] = c
                if rec(v + 1, max(used, c + 1)):
                    return True
        return False

    return rec(0, 0)


def brute_chromatic(g: Graph, colorable=proper_colorable_numpy) -> int:
    k = 0
    while not colorable(g, k):
        k += 1
    return k


def brute_find_induced(host: Graph, pattern: Graph) -> bool:
    for sub in itertools.combinations(range(host.n), pattern.n):
        for perm in itertools.permutations(sub):
            if all(pattern.has_edge(i, j) == host.has_edge(perm[i], perm[j])
                   for i, j in pair_index(pattern.n)):
                return True
    return False


def all_subgraphs(g: Graph) -> Iterable[Graph]:
    """Every subgraph (vertex subset, then any edge subset), the graph itself included."""
    for r in range(g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            h = g.induced_subgraph(sub)
            es = h.edges()
            for m in range(1 << len(es)):
                yield from_edge_list(h.n, [e for i, e in enumerate(es) if m >> i & 1])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def grow_free(rng: random.Random, base: Graph, target_n: int, patterns: Sequence[Graph], p: float,
              tries: int = 30) -> Graph:
    """Add random vertices one at a time, rejecting any that create a forbidden copy."""
    g = base
    while g.n < target_n:
        for _ in range(tries):
            mask = sum(1 << v for v in range(g.n) if rng.random() < p)
            h = g.add_vertex(mask)
            if is_free(h, patterns)[0]:
                g = h
                break
        else:
            break
    return g


def shuffle_labels(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.permute(perm)


# -- hosts and injections around a 5-hole or 7-antihole ---------------------

C5_SIGNATURES = [()] + [tuple((i + d) % 5 for d in ds) for i in range(5)
                        for ds in ((-1, 1), (-1, 0, 1), (-2, 0, 2), (-2, -1, 1, 2))] + [tuple(range(5))]
C7BAR_SIGNATURES = [tuple((i + d) % 7 for d in ds) for i in range(7) for ds in ((-1, 0, 1), (-2, -1, 0, 1, 3))]


def attach(rng: random.Random, base: Graph, signatures: Sequence[tuple[int, ...]], count: int, p: float,
           patterns: Sequence[Graph] = (), tries: int = 40) -> Graph:
    """Add ``count`` vertices, each with a random allowed signature on vertices 0..len(base)-1
    and random edges to the earlier added vertices.  With ``patterns`` given, candidates that
    create a forbidden copy are rejected."""
    g = base
    core = base.n
    for _ in range(count):
        for _ in range(tries):
            sig = rng.choice(signatures)
            mask = sum(1 << v for v in sig)
            mask |= sum(1 << v for v in range(core, g.n) if rng.random() < p)
            h = g.add_vertex(mask)
            if not patterns or is_free(h, patterns)[0]:
                g = h
                break
    return g
