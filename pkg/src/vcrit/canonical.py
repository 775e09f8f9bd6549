"""Canonical labelling by colour refinement, individualisation and automorphism pruning.

The canonical form of a graph is the lexicographically least graph6 string
over all leaves of the individualisation-refinement search tree.  Leaves
that are images of already visited subtrees under discovered automorphisms
are skipped.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits, to_graph6


@dataclass(frozen=True)
class OrderedPartition:
    """Ordered cells of vertex bitsets covering ``0..n-1``."""

    cells: tuple[int, ...]

    @classmethod
    def unit(cls, n: int) -> OrderedPartition:
        return cls(((1 << n) - 1,) if n else ())

    @classmethod
    def from_lists(cls, cells: Sequence[Sequence[int]]) -> OrderedPartition:
        return cls(tuple(sum(1 << v for v in c) for c in cells))

    def as_lists(self) -> list[list[int]]:
        return [list(bits(c)) for c in self.cells]

    def is_discrete(self) -> bool:
        return all(c & (c - 1) == 0 for c in self.cells)

    def is_valid_for(self, n: int) -> bool:
        seen = 0
        for c in self.cells:
            if not c or c & seen:
                return False
            seen |= c
        return seen == (1 << n) - 1


@dataclass(frozen=True)
class CanonicalForm:
    canon_g6: str
    perm: tuple[int, ...]  # perm[v] is the canonical label of input vertex v


def _refine(adj: Sequence[int], cells: list[int], splitters: list[int]) -> list[int]:
    queue = deque(splitters)
    while queue:
        s = queue.popleft()
        out = []
        for c in cells:
            if c & (c - 1) == 0:
                out.append(c)
                continue
            groups: dict[int, int] = {}
            for v in bits(c):
                key = (adj[v] & s).bit_count()
                groups[key] = groups.get(key, 0) | (1 << v)
            if len(groups) == 1:
                out.append(c)
                continue
            for key in sorted(groups):
                frag = groups[key]
                out.append(frag)
                queue.append(frag)
        cells = out
    return cells


def refine(g: Graph, p: OrderedPartition | None = None) -> OrderedPartition:
    """Coarsest equitable refinement of ``p`` (unit partition by default)."""
    if p is None:
        p = OrderedPartition.unit(g.n)
    cells = list(p.cells)
    return OrderedPartition(tuple(_refine(g.adj, cells, list(cells))))


def _leaf_code(adj: Sequence[int], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _orbit_reps(cands: list[int], autos: list[tuple[int, ...]]) -> dict[int, int]:
    parent = {v: v for v in cands}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in autos:
        for v in cands:
            w = a[v]
            if w in parent:
                rv, rw = find(v), find(w)
                if rv != rw:
                    parent[max(rv, rw)] = min(rv, rw)
    return {v: find(v) for v in cands}


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.first_code = None
        self.first_path: list[int] = []
        self.first_order: list[int] = []
        self.best_code = None
        self.best_path: list[int] = []
        self.best_order: list[int] = []
        self.autos: list[tuple[int, ...]] = []

    def _auto(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        perm = tuple(perm)
        if perm != tuple(range(self.n)):
            self.autos.append(perm)

    @staticmethod
    def _common(a: list[int], b: list[int]) -> int:
        d = 0
        for x, y in zip(a, b):
            if x != y:
                break
            d += 1
        return d

    def leaf(self, cells: list[int], prefix: list[int]) -> int:
        order = [c.bit_length() - 1 for c in cells]
        code = _leaf_code(self.adj, order)
        if self.first_code is None:
            self.first_code = self.best_code = code
            self.first_path = self.best_path = list(prefix)
            self.first_order = self.best_order = order
            return len(prefix)
        if code == self.first_code:
            self._auto(self.first_order, order)
            return self._common(prefix, self.first_path)
        if code == self.best_code:
            self._auto(self.best_order, order)
            return self._common(prefix, self.best_path)
        if code < self.best_code:
            self.best_code = code
            self.best_path = list(prefix)
            self.best_order = order
        return len(prefix)

    def run(self, cells: list[int], prefix: list[int]) -> int:
        """Explore the subtree; the return value is the depth to resume at."""
        depth = len(prefix)
        target = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
        if target is None:
            return self.leaf(cells, prefix)
        cell = cells[target]
        cands = list(bits(cell))
        tried: list[int] = []
        for w in cands:
            if tried:
                fixing = [a for a in self.autos if all(a[x] == x for x in prefix)]
                if fixing:
                    reps = _orbit_reps(cands, fixing)
                    if any(reps[w] == reps[t] for t in tried):
                        continue
            tried.append(w)
            bit = 1 << w
            child = cells[:target] + [bit, cell & ~bit] + cells[target + 1:]
            child = _refine(self.adj, child, [bit])
            prefix.append(w)
            back = self.run(child, prefix)
            prefix.pop()
            if back < depth:
                return back
        return depth


def canonical_form(g: Graph) -> CanonicalForm:
    n = g.n
    if n == 0:
        return CanonicalForm(to_graph6(g), ())
    full = (1 << n) - 1
    search = _Search(g)
    search.run(_refine(g.adj, [full], [full]), [])
    order = search.best_order
    perm = [0] * n
    for i, v in enumerate(order):
        perm[v] = i
    canon = g.relabel_subset(order)
    return CanonicalForm(to_graph6(canon), tuple(perm))


def canonical_graph6(g: Graph) -> str:
    return canonical_form(g).canon_g6


def canonical_graph(g: Graph) -> Graph:
    cf = canonical_form(g)
    return g.permute(cf.perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g).canon_g6 == canonical_form(h).canon_g6
