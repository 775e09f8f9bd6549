"""Criticality predicates and the lemma-level obstructions to vertex-criticality."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any, Iterable

from .color import chromatic_number, is_k_colorable
from .detect import is_free
from .graph import Graph, GraphError, bits


class NotHFree(GraphError):
    pass


class SizeLimit(ValueError):
    pass


class Kind(str, Enum):
    VERTEX_CRITICAL = "vertex-critical"
    CRITICAL_CLASSICAL = "critical-classical"
    CRITICAL_HFREE = "critical-hfree"
    NOT_CRITICAL = "not-critical"


@dataclass(frozen=True)
class CriticalityReport:
    """Outcome of a criticality test.

    ``witness`` is set exactly when the test failed: a vertex (int), an edge
    (pair), a proper subgraph (:class:`Graph`), or a colouring showing that
    the chromatic number is below ``k``.
    """

    kind: Kind
    k: int
    chi: int
    witness: Any = None
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.kind is not Kind.NOT_CRITICAL


def _chi_mismatch(g: Graph, k: int) -> CriticalityReport | None:
    chi, col = chromatic_number(g)
    if chi != k:
        return CriticalityReport(Kind.NOT_CRITICAL, k, chi, col, f"chromatic number is {chi}, not {k}")
    return None


def _vertex_failure(g: Graph, k: int) -> int | None:
    for v in range(g.n):
        if is_k_colorable(g.delete_vertex(v), k - 1) is None:
            return v
    return None


def is_k_vertex_critical(g: Graph, k: int) -> CriticalityReport:
    bad = _chi_mismatch(g, k)
    if bad:
        return bad
    v = _vertex_failure(g, k)
    if v is not None:
        return CriticalityReport(Kind.NOT_CRITICAL, k, k, v, f"deleting vertex {v} keeps chromatic number {k}")
    return CriticalityReport(Kind.VERTEX_CRITICAL, k, k)


def is_k_critical_classical(g: Graph, k: int) -> CriticalityReport:
    bad = _chi_mismatch(g, k)
    if bad:
        return bad
    v = _vertex_failure(g, k)
    if v is not None:
        return CriticalityReport(Kind.NOT_CRITICAL, k, k, v, f"deleting vertex {v} keeps chromatic number {k}")
    for u, w in g.edges():
        if is_k_colorable(g.delete_edge(u, w), k - 1) is None:
            return CriticalityReport(Kind.NOT_CRITICAL, k, k, (u, w),
                                     f"deleting edge {u}-{w} keeps chromatic number {k}")
    return CriticalityReport(Kind.CRITICAL_CLASSICAL, k, k)


def one_deletions(g: Graph) -> Iterable[Graph]:
    """Every subgraph obtained by deleting a single vertex or a single edge."""
    for v in range(g.n):
        yield g.delete_vertex(v)
    for u, w in g.edges():
        yield g.delete_edge(u, w)


def is_k_critical_hfree(g: Graph, k: int, patterns: Iterable[Graph]) -> CriticalityReport:
    """Whether ``g`` is k-chromatic and every proper H-free subgraph is (k-1)-colourable.

    Depth-first over deletion subgraphs.  A subgraph that is already
    (k-1)-colourable is dismissed together with all of its own subgraphs.
    A k-chromatic subgraph containing a forbidden copy is only a stepping
    stone: every H-free subgraph below it misses an edge of that copy, so
    only those edge deletions are explored.  Sibling branches keep the edges
    tried before them, which makes the branches disjoint.  Vertex deletions
    are decided at the top, since ``g - v`` is induced and therefore H-free.
    """
    patterns = list(patterns)
    if not is_free(g, patterns)[0]:
        raise NotHFree("input graph contains a forbidden induced subgraph")
    bad = _chi_mismatch(g, k)
    if bad:
        return bad
    v = _vertex_failure(g, k)
    if v is not None:
        return CriticalityReport(Kind.NOT_CRITICAL, k, k, g.delete_vertex(v),
                                 f"deleting vertex {v} leaves an H-free k-chromatic subgraph")
    stack: list[tuple[Graph, frozenset]] = []
    _branch(g, g.edges(), frozenset(), stack)
    while stack:
        s, kept = stack.pop()
        if is_k_colorable(s, k - 1) is not None:
            continue
        free, hit = is_free(s, patterns)
        if free:
            return CriticalityReport(Kind.NOT_CRITICAL, k, k, s, "a proper H-free subgraph is still k-chromatic")
        emb = hit[1]
        copy_edges = [(min(a, b), max(a, b)) for i, a in enumerate(emb) for b in emb[i + 1:] if s.has_edge(a, b)]
        _branch(s, copy_edges, kept, stack)
    return CriticalityReport(Kind.CRITICAL_HFREE, k, k)


def _branch(s: Graph, edges, kept: frozenset, stack: list) -> None:
    for e in edges:
        if e in kept:
            continue
        stack.append((s.delete_edge(*e), kept))
        kept = kept | {e}


# -- structural obstructions ------------------------------------------------

def find_comparable_pair(g: Graph) -> tuple[int, int] | None:
    """A nonadjacent pair ``(x, y)`` with ``N(x) ⊆ N(y)``, or ``None``."""
    adj = g.adj
    for x in range(g.n):
        for y in range(g.n):
            if x != y and not adj[x] >> y & 1 and not adj[x] & ~adj[y]:
                return x, y
    return None


def neighborhood(g: Graph, mask: int) -> int:
    out = 0
    for v in bits(mask):
        out |= g.adj[v]
    return out & ~mask


def _chi_of(g: Graph, mask: int, cache: dict[int, int]) -> int:
    if mask not in cache:
        cache[mask] = chromatic_number(g.induced_subgraph(mask))[0]
    return cache[mask]


def find_xy_obstruction(g: Graph, max_size: int = 2) -> tuple[int, int] | None:
    """Disjoint nonempty ``X``, ``Y`` (bitsets) that certify ``g`` is not vertex-critical.

    Conditions: ``X`` anticomplete to ``Y``, ``chi(G[X]) <= chi(G[Y])`` and
    ``Y`` complete to ``N(X)``.  Sets are tried by increasing size.
    """
    if max_size > 4:
        raise SizeLimit("obstruction search is limited to |X|, |Y| <= 4")
    n = g.n
    full = g.vertex_mask
    cache: dict[int, int] = {}
    for xs in range(1, max_size + 1):
        for xset in combinations(range(n), xs):
            x = sum(1 << v for v in xset)
            nx = neighborhood(g, x)
            room = full & ~x & ~nx
            for v in bits(nx):
                room &= g.adj[v]
            if not room:
                continue
            cx = _chi_of(g, x, cache)
            for ys in range(1, max_size + 1):
                for yset in combinations(list(bits(room)), ys):
                    y = sum(1 << v for v in yset)
                    if _chi_of(g, y, cache) >= cx:
                        return x, y
    return None


def closure(g: Graph, mask: int) -> int:
    """Smallest homogeneous set containing ``mask``."""
    full = g.vertex_mask
    while True:
        grown = mask
        for v in bits(full & ~mask):
            hit = g.adj[v] & mask
            if hit and hit != mask:
                grown |= 1 << v
        if grown == mask:
            return mask
        mask = grown


def mixed_vertices(g: Graph, mask: int) -> int:
    out = 0
    for v in bits(g.vertex_mask & ~mask):
        hit = g.adj[v] & mask
        if hit and hit != mask:
            out |= 1 << v
    return out


def is_homogeneous(g: Graph, mask: int) -> bool:
    return mixed_vertices(g, mask) == 0


def homogeneous_sets(g: Graph) -> list[int]:
    """All inclusion-maximal proper homogeneous sets with at least two vertices.

    Explores closures upward from every vertex pair; exponential on graphs
    with very many modules (e.g. edgeless graphs), fine on critical graphs.
    """
    full = g.vertex_mask
    seen: set[int] = set()
    stack = []
    for a, b in combinations(range(g.n), 2):
        m = closure(g, (1 << a) | (1 << b))
        if m != full and m not in seen:
            seen.add(m)
            stack.append(m)
    maximal = []
    while stack:
        m = stack.pop()
        grew = False
        for v in bits(full & ~m):
            m2 = closure(g, m | (1 << v))
            if m2 == full:
                continue
            grew = True
            if m2 not in seen:
                seen.add(m2)
                stack.append(m2)
        if not grew:
            maximal.append(m)
    return sorted(maximal)


@dataclass
class HomogeneityReport:
    holds: bool
    checked: int = 0
    violations: list[tuple[int, int, int]] = field(default_factory=list)  # (set, component, chi)


def check_homogeneous_criticality(g: Graph, k: int) -> HomogeneityReport:
    """Every component of a homogeneous set with chromatic number m < k must be m-vertex-critical."""
    report = HomogeneityReport(True)
    for h in homogeneous_sets(g):
        for comp in g.components(h):
            a = g.induced_subgraph(comp)
            m = chromatic_number(a)[0]
            report.checked += 1
            if m < k and not is_k_vertex_critical(a, m).passed:
                report.holds = False
                report.violations.append((h, comp, m))
    return report
