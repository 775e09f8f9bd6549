"""Exact vertex colouring by saturation-ordered backtracking."""

from __future__ import annotations

from dataclasses import dataclass

from .detect import clique_number
from .graph import Graph, bits


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n:
            return False
        if any(not 0 <= c < self.k for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())

    def classes(self) -> list[int]:
        masks = [0] * self.k
        for v, c in enumerate(self.colors):
            masks[c] |= 1 << v
        return masks


def _search(adj: tuple[int, ...], n: int, k: int, seed: list[int]) -> list[int] | None:
    """Backtracking k-colouring; ``seed`` is a clique coloured 0..len(seed)-1 up front."""
    color = [-1] * n
    classes = [0] * k
    for c, v in enumerate(seed):
        color[v] = c
        classes[c] |= 1 << v
    uncolored = ((1 << n) - 1) & ~sum(1 << v for v in seed)
    used = len(seed)
    # Each vertex's degree is fixed, and a cheap tie-break; saturation is recomputed per step.
    degree = [row.bit_count() for row in adj]

    def pick(uncolored: int) -> tuple[int, int] | None:
        best = -1
        best_sat = -1
        best_deg = -1
        best_forbidden = 0
        for v in bits(uncolored):
            row = adj[v]
            forbidden = 0
            sat = 0
            for c in range(k):
                if classes[c] & row:
                    forbidden |= 1 << c
                    sat += 1
            if sat > best_sat or (sat == best_sat and degree[v] > best_deg):
                best, best_sat, best_deg, best_forbidden = v, sat, degree[v], forbidden
                if sat == k:
                    break
        return best, best_forbidden

    def rec(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        v, forbidden = pick(uncolored)
        limit = min(k, used + 1)
        rest = uncolored & ~(1 << v)
        bit = 1 << v
        for c in range(limit):
            if forbidden >> c & 1:
                continue
            classes[c] |= bit
            color[v] = c
            if rec(rest, max(used, c + 1)):
                return True
            classes[c] &= ~bit
        color[v] = -1
        return False

    if rec(uncolored, used):
        return color
    return None


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    """A proper colouring with at most ``k`` colours, or ``None`` if none exists."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if g.n == 0:
        return Coloring((), k)
    if k == 0:
        return None
    omega, clique = clique_number(g)
    if omega > k:
        return None
    colors = _search(g.adj, g.n, k, list(bits(clique)))
    if colors is None:
        return None
    return Coloring(tuple(colors), k)


def _greedy_upper_bound(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    color = [-1] * g.n
    for v in order:
        taken = {color[u] for u in bits(g.adj[v]) if color[u] >= 0}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return max(color) + 1 if g.n else 0


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness colouring using exactly that many colours."""
    if g.n == 0:
        return 0, Coloring((), 0)
    omega, clique = clique_number(g)
    upper = _greedy_upper_bound(g)
    seed = list(bits(clique))
    for k in range(omega, upper + 1):
        colors = _search(g.adj, g.n, k, seed)
        if colors is not None:
            return k, Coloring(tuple(colors), k)
    raise AssertionError("greedy bound must be attainable")  # pragma: no cover


def chi(g: Graph) -> int:
    return chromatic_number(g)[0]


def is_colorable_adj(adj: tuple[int, ...], n: int, k: int) -> bool:
    """Raw-bitset entry point used by the generator's hot loop (no clique seeding)."""
    if n == 0:
        return True
    return _search(adj, n, k, []) is not None
