"""Induced subgraph detection and clique number."""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph, bits, complete, cycle, cycle_complement, path, wheel4

P5 = path(5)
W4 = wheel4()
C5 = cycle(5)
C7BAR = cycle_complement(7)

Embedding = tuple[int, ...]


def search_order(pattern: Graph) -> list[int]:
    """Most-constrained-first order: each next vertex has the most already placed neighbours."""
    n = pattern.n
    placed = 0
    order = []
    deg = pattern.degrees()
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if placed >> v & 1:
                continue
            key = ((pattern.adj[v] & placed).bit_count(), deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


def is_embedding(host: Graph, pattern: Graph, emb: Sequence[int]) -> bool:
    """True iff ``emb`` is an injective map inducing exactly ``pattern``."""
    if len(emb) != pattern.n or len(set(emb)) != pattern.n:
        return False
    if any(not 0 <= v < host.n for v in emb):
        return False
    for i in range(pattern.n):
        for j in range(i + 1, pattern.n):
            if pattern.has_edge(i, j) != host.has_edge(emb[i], emb[j]):
                return False
    return True


def find_induced(host: Graph, pattern: Graph, within: int | None = None) -> Embedding | None:
    """First induced copy of ``pattern`` in ``host`` (optionally inside vertex set ``within``)."""
    k = pattern.n
    if k == 0:
        return ()
    if k > host.n:
        return None
    allowed = host.vertex_mask if within is None else within
    order = search_order(pattern)
    pdeg = pattern.degrees()
    hadj = host.adj
    # host vertices with enough degree for each pattern vertex
    by_degree = {}
    for d in set(pdeg):
        by_degree[d] = sum(1 << v for v in bits(allowed) if (hadj[v] & allowed).bit_count() >= d)
    # for each step, the earlier steps that are neighbours / non-neighbours
    constraints = []
    for step, p in enumerate(order):
        nbr = [i for i in range(step) if pattern.has_edge(p, order[i])]
        non = [i for i in range(step) if not pattern.has_edge(p, order[i])]
        constraints.append((nbr, non, by_degree[pdeg[p]]))
    image = [0] * k

    def rec(step: int, used: int) -> bool:
        if step == k:
            return True
        nbr, non, cand = constraints[step]
        cand &= ~used
        for i in nbr:
            cand &= hadj[image[i]]
        for i in non:
            cand &= ~hadj[image[i]]
        while cand:
            low = cand & -cand
            cand ^= low
            image[step] = low.bit_length() - 1
            if rec(step + 1, used | low):
                return True
        return False

    if not rec(0, 0):
        return None
    emb = [0] * k
    for step, p in enumerate(order):
        emb[p] = image[step]
    return tuple(emb)


def is_free(g: Graph, patterns: Iterable[Graph]) -> tuple[bool, tuple[Graph, Embedding] | None]:
    """Whether ``g`` contains none of ``patterns``; on failure also the first violation found."""
    for h in patterns:
        emb = find_induced(g, h)
        if emb is not None:
            return False, (h, emb)
    return True, None


def is_hfree(g: Graph, patterns: Iterable[Graph]) -> bool:
    return is_free(g, patterns)[0]


def find_induced_c5(g: Graph) -> Embedding | None:
    """Vertices ``v1..v5`` of an induced 5-cycle, consecutive ones adjacent."""
    return find_induced(g, C5)


def find_induced_c7bar(g: Graph) -> Embedding | None:
    """Vertices ``v1..v7`` of an induced 7-antihole: ``v_i v_j`` adjacent iff ``1 < |i-j| < 6``."""
    return find_induced(g, C7BAR)


def clique_number(g: Graph) -> tuple[int, int]:
    """Exact clique number and a maximum clique bitset, by branch and bound."""
    adj = g.adj
    best = [0, 0]

    def expand(size: int, clique: int, cand: int) -> None:
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, clique
            return
        while cand:
            if size + cand.bit_count() <= best[0]:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, clique | low, cand & adj[v])

    expand(0, 0, g.vertex_mask)
    return best[0], best[1]


def has_clique(g: Graph, size: int) -> bool:
    return clique_number(g)[0] >= size


__all__ = [
    "C5", "C7BAR", "P5", "W4", "Embedding", "clique_number", "complete", "find_induced",
    "find_induced_c5", "find_induced_c7bar", "is_embedding", "is_free", "is_hfree", "search_order",
]
