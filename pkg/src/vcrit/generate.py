"""Exhaustive isomorph-free generation of k-vertex-critical H-free graphs.

Starting from an induced seed ``I``, every target graph is reached by
repeatedly adding one vertex with some neighbourhood in the current graph.
Two implementations share the same pruning and dedup semantics:

* :func:`generate_reference` is the literal recursion, building every child
  and calling :func:`prune` on it.
* :func:`generate` is the production engine.  It keeps, per node, the array
  of neighbourhoods whose addition keeps the graph H-free and K_k-free, and
  updates it incrementally from the embeddings through the newest vertex.

Child restriction (``enable_similar_pair_pruning``): if ``I`` is induced in
a k-vertex-critical ``G != I`` then

* every ``v`` with ``deg_I(v) < k-1`` has a neighbour in ``G - I``;
* for disjoint anticomplete ``X``, ``Y`` in ``I`` with ``chi(X) <= chi(Y)``
  and ``Y`` complete to ``N_I(X)``, some vertex of ``G - I`` meets ``X`` and
  misses part of ``Y`` (otherwise ``X``, ``Y`` obstruct criticality in ``G``);
* some vertex of ``G - I`` has a neighbour in ``I`` (``G`` is connected).

Each fact names a property that at least one vertex of ``G - I`` has, so it
suffices to branch only on neighbourhoods with that property.  The engine
picks the single fact that leaves the fewest children.
"""

from __future__ import annotations

import os
import sqlite3
import tempfile
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .canonical import canonical_graph6
from .color import _search, chromatic_number
from .critical import find_comparable_pair
from .detect import C5, C7BAR, P5, W4, clique_number, is_free
from .graph import MAX_VERTICES, CapacityExceeded, Graph, bits, complete

Sink = Callable[[str], None]

MAX_SEED_VERTICES = 24


class InvalidConfig(ValueError):
    pass


class Decision(str, Enum):
    CONTINUE = "continue"
    EMIT_AND_STOP = "emit-and-stop"
    STOP = "stop"


@dataclass
class GenConfig:
    k: int
    patterns: Sequence[Graph]
    seed: Graph
    max_n: int | None = None
    enable_similar_pair_pruning: bool = True
    parallel: bool = False
    workers: int = 4
    spill_threshold: int | None = None
    spill_path: str | None = None

    def validate(self) -> None:
        if self.k < 1:
            raise InvalidConfig("k must be at least 1")
        if self.max_n is not None and not 0 <= self.max_n <= MAX_VERTICES:
            raise InvalidConfig(f"max_n must lie in 0..{MAX_VERTICES}")
        if self.seed.n > MAX_SEED_VERTICES:
            raise InvalidConfig(f"seed has more than {MAX_SEED_VERTICES} vertices")
        if not is_free(self.seed, self.patterns)[0]:
            raise InvalidConfig("seed contains a forbidden induced subgraph")


@dataclass
class GenStats:
    visited: int = 0       # graphs reaching the prune stage
    expanded: int = 0      # graphs whose children were generated
    canonical: int = 0     # distinct canonical forms stored
    outputs: int = 0
    pruned: dict[str, int] = field(default_factory=dict)
    levels: dict[int, int] = field(default_factory=dict)
    capped: bool = False   # some node at max_n still had children
    capped_nodes: int = 0
    seconds: float = 0.0

    @property
    def nodes(self) -> int:
        return self.visited

    def bump(self, rule: str, count: int = 1) -> None:
        if count:
            self.pruned[rule] = self.pruned.get(rule, 0) + count

    def merge(self, other: GenStats) -> None:
        self.visited += other.visited
        self.expanded += other.expanded
        self.canonical += other.canonical
        self.outputs += other.outputs
        self.capped = self.capped or other.capped
        self.capped_nodes += other.capped_nodes
        self.seconds += other.seconds
        for key, val in other.pruned.items():
            self.bump(key, val)
        for key, val in other.levels.items():
            self.levels[key] = self.levels.get(key, 0) + val

    def lines(self) -> list[str]:
        out = [
            f"visited={self.visited}", f"expanded={self.expanded}", f"canonical={self.canonical}",
            f"outputs={self.outputs}", f"capped={str(self.capped).lower()}", f"capped_nodes={self.capped_nodes}",
            f"seconds={self.seconds:.2f}",
        ]
        out += [f"pruned.{key}={val}" for key, val in sorted(self.pruned.items())]
        out += [f"level.{n}={c}" for n, c in sorted(self.levels.items())]
        return out


class CanonicalStore:
    """Set of canonical graph6 strings with atomic test-and-insert.

    Above ``spill_threshold`` entries the in-memory part is flushed to an
    sqlite file and membership checks fall through to it.
    """

    def __init__(self, spill_threshold: int | None = None, spill_path: str | None = None):
        self._mem: set[str] = set()
        self._lock = threading.Lock()
        self._threshold = spill_threshold
        self._path = spill_path
        self._db: sqlite3.Connection | None = None
        self._spilled = 0

    def _open(self) -> sqlite3.Connection:
        if self._db is None:
            if self._path is None:
                fd, self._path = tempfile.mkstemp(prefix="vcrit-store-", suffix=".sqlite")
                os.close(fd)
            self._db = sqlite3.connect(self._path, check_same_thread=False)
            self._db.execute("CREATE TABLE IF NOT EXISTS forms (g6 TEXT PRIMARY KEY)")
        return self._db

    def add(self, key: str) -> bool:
        """Insert ``key``; True iff it was not present."""
        with self._lock:
            if key in self._mem:
                return False
            if self._db is not None:
                if self._db.execute("SELECT 1 FROM forms WHERE g6 = ?", (key,)).fetchone():
                    return False
            self._mem.add(key)
            if self._threshold is not None and len(self._mem) > self._threshold:
                db = self._open()
                db.executemany("INSERT OR IGNORE INTO forms VALUES (?)", ((k,) for k in self._mem))
                db.commit()
                self._spilled += len(self._mem)
                self._mem.clear()
            return True

    def __contains__(self, key: str) -> bool:
        with self._lock:
            if key in self._mem:
                return True
            return bool(self._db and self._db.execute("SELECT 1 FROM forms WHERE g6 = ?", (key,)).fetchone())

    def __len__(self) -> int:
        return len(self._mem) + self._spilled

    @property
    def spilled(self) -> bool:
        return self._db is not None

    def close(self) -> None:
        if self._db is not None:
            self._db.close()
            self._db = None


# -- shared predicates ------------------------------------------------------


def _is_complete(g: Graph) -> bool:
    return g.num_edges() == g.n * (g.n - 1) // 2


def prune(I: Graph, cfg: GenConfig) -> Decision:
    """Decision for a graph met during the search (before canonical dedup)."""
    if not is_free(I, cfg.patterns)[0]:
        return Decision.STOP
    omega = clique_number(I)[0]
    if omega >= cfg.k and not (I.n == cfg.k and _is_complete(I)):
        return Decision.STOP
    if chromatic_number(I)[0] >= cfg.k:
        return Decision.EMIT_AND_STOP
    return Decision.CONTINUE


def is_vertex_critical_fast(g: Graph, k: int) -> bool:
    """k-vertex-criticality for a graph already known to have ``chi >= k``.

    Cheap necessary conditions first: minimum degree, comparable pairs,
    clique bound; then one (k-1)-colouring per vertex deletion.
    """
    if g.n == 0 or min(g.degrees()) < k - 1:
        return False
    if find_comparable_pair(g) is not None:
        return False
    if clique_number(g)[0] > k:
        return False
    if _search(g.adj, g.n, k, []) is None:
        return False
    for v in range(g.n):
        h = g.delete_vertex(v)
        if _search(h.adj, h.n, k - 1, []) is None:
            return False
    return True


def restriction_rules(g: Graph, k: int) -> list[tuple[int, int]]:
    """Pairs ``(X, Y)`` meaning: some new vertex meets ``X`` and does not contain ``Y``.

    ``Y = 0`` is the bare condition ``N & X != 0``.  ``X`` ranges over single
    vertices, pairs and triangles; ``Y`` over minimal sets with
    ``chi(Y) >= chi(X)`` (a vertex, an edge, a triangle).
    """
    n = g.n
    adj = g.adj
    full = g.vertex_mask
    out: list[tuple[int, int]] = []
    for v in range(n):
        if (adj[v]).bit_count() < k - 1:
            out.append((1 << v, 0))
    xs: list[tuple[int, int]] = []
    for x in range(n):
        xs.append((1 << x, 1))
        for y in range(x + 1, n):
            if adj[x] >> y & 1:
                xs.append(((1 << x) | (1 << y), 2))
                for z in bits(adj[x] & adj[y] & ~((1 << (y + 1)) - 1)):
                    xs.append(((1 << x) | (1 << y) | (1 << z), 3))
            else:
                xs.append(((1 << x) | (1 << y), 1))
    for X, chi_x in xs:
        nx = 0
        for v in bits(X):
            nx |= adj[v]
        nx &= ~X
        room = full & ~X & ~nx
        for v in bits(nx):
            room &= adj[v]
        if not room:
            continue
        for a in bits(room):
            if chi_x == 1:
                out.append((X, 1 << a))
                continue
            for b in bits(adj[a] & room & ~((1 << (a + 1)) - 1)):
                if chi_x == 2:
                    out.append((X, (1 << a) | (1 << b)))
                    continue
                for c in bits(adj[a] & adj[b] & room & ~((1 << (b + 1)) - 1)):
                    out.append((X, (1 << a) | (1 << b) | (1 << c)))
    return out


def _rule_ok(N: int, rule: tuple[int, int]) -> bool:
    X, Y = rule
    return bool(N & X) and (not Y or N & Y != Y)


def expansions(I: Graph, cfg: GenConfig) -> Iterator[Graph]:
    """I plus one vertex, for every neighbourhood subset (restricted when pruning is on)."""
    if I.n >= MAX_VERTICES:
        raise CapacityExceeded("cannot add a vertex beyond 64")
    subsets: Iterable[int] = range(1 << I.n)
    if cfg.enable_similar_pair_pruning:
        rules = restriction_rules(I, cfg.k)
        pool = [N for N in subsets if N]
        if rules:
            best = min((list(filter(lambda N, r=r: _rule_ok(N, r), pool)) for r in rules), key=len)
            pool = best
        subsets = pool
    for N in subsets:
        yield I.add_vertex(N)


# -- reference recursion ----------------------------------------------------


def generate_reference(cfg: GenConfig, sink: Sink, store: CanonicalStore | None = None) -> GenStats:
    """Literal recursion: prune, dedup, emit, expand every child."""
    cfg.validate()
    store = store if store is not None else CanonicalStore()
    stats = GenStats()
    t0 = time.perf_counter()

    def visit(I: Graph) -> None:
        stats.visited += 1
        decision = prune(I, cfg)
        if decision is Decision.STOP:
            stats.bump("prune")
            return
        key = canonical_graph6(I)
        if not store.add(key):
            stats.bump("duplicate")
            return
        stats.canonical += 1
        stats.levels[I.n] = stats.levels.get(I.n, 0) + 1
        if decision is Decision.EMIT_AND_STOP:
            if is_vertex_critical_fast(I, cfg.k):
                stats.outputs += 1
                sink(key)
            return
        if cfg.max_n is not None and I.n >= cfg.max_n:
            stats.capped = True
            stats.capped_nodes += 1
            return
        stats.expanded += 1
        for child in expansions(I, cfg):
            visit(child)

    visit(cfg.seed)
    stats.seconds = time.perf_counter() - t0
    return stats


# -- production engine ------------------------------------------------------


def _embeddings_through(host: Graph, pattern: Graph, u: int) -> list[tuple[int, ...]]:
    """All induced embeddings of ``pattern`` into ``host`` whose image contains ``u``."""
    k = pattern.n
    if k == 0 or k > host.n:
        return []
    hadj = host.adj
    full = host.vertex_mask
    out = []
    for q in range(k):
        order = [q]
        placed = 1 << q
        while len(order) < k:
            nxt = max((v for v in range(k) if not placed >> v & 1),
                      key=lambda v: ((pattern.adj[v] & placed).bit_count(), pattern.degree(v)))
            order.append(nxt)
            placed |= 1 << nxt
        cons = [([i for i in range(s) if pattern.has_edge(p, order[i])],
                 [i for i in range(s) if not pattern.has_edge(p, order[i])]) for s, p in enumerate(order)]
        img = [u] + [0] * (k - 1)

        def rec(s: int, used: int) -> None:
            if s == k:
                emb = [0] * k
                for t, p in enumerate(order):
                    emb[p] = img[t]
                out.append(tuple(emb))
                return
            nbr, non = cons[s]
            cand = full & ~used
            for i in nbr:
                cand &= hadj[img[i]]
            for i in non:
                cand &= ~hadj[img[i]]
            while cand:
                low = cand & -cand
                cand ^= low
                img[s] = low.bit_length() - 1
                rec(s + 1, used | low)

        rec(1, 1 << u)
    return out


class _Engine:
    def __init__(self, cfg: GenConfig, sink: Sink, store: CanonicalStore):
        self.cfg = cfg
        self.k = cfg.k
        self.sink = sink
        self.store = store
        self.stats = GenStats()
        self.lock = threading.Lock()
        # (H - p, neighbours of p in H - p); a new vertex completing one of these is forbidden
        self.partials: list[tuple[Graph, int]] = []
        for h in cfg.patterns:
            for p in range(h.n):
                nbr = sum(1 << (i if i < p else i - 1) for i in range(h.n) if h.has_edge(p, i))
                self.partials.append((h.delete_vertex(p), nbr))
        if cfg.k >= 2:
            self.partials.append((complete(cfg.k - 1), (1 << (cfg.k - 1)) - 1))

    # clauses (A, B): a neighbourhood N is forbidden when A <= N and N & B == 0
    def clauses_through(self, g: Graph, u: int) -> set[tuple[int, int]]:
        out = set()
        for part, nbr in self.partials:
            for emb in _embeddings_through(g, part, u):
                a = b = 0
                for i, v in enumerate(emb):
                    if nbr >> i & 1:
                        a |= 1 << v
                    else:
                        b |= 1 << v
                out.add((a, b))
        return out

    @staticmethod
    def apply_clauses(cands: np.ndarray, clauses: Iterable[tuple[int, int]]) -> np.ndarray:
        keep = np.ones(len(cands), dtype=bool)
        for a, b in clauses:
            ua, ub = np.uint64(a), np.uint64(b)
            keep &= ~(((cands & ua) == ua) & ((cands & ub) == 0))
        return cands[keep]

    def _count(self, attr: str, n: int | None = None) -> None:
        with self.lock:
            if attr == "level":
                self.stats.levels[n] = self.stats.levels.get(n, 0) + 1
            else:
                setattr(self.stats, attr, getattr(self.stats, attr) + 1)

    def _bump(self, rule: str, count: int = 1) -> None:
        if count:
            with self.lock:
                self.stats.bump(rule, count)

    def _emit(self, g: Graph, key: str | None = None) -> None:
        key = key or canonical_graph6(g)
        if self.store.add(key):
            with self.lock:
                self.stats.canonical += 1
                self.stats.levels[g.n] = self.stats.levels.get(g.n, 0) + 1
                self.stats.outputs += 1
                self.sink(key)
        else:
            self._bump("duplicate")

    def run_seed(self, seed: Graph) -> None:
        self._count("visited")
        decision = prune(seed, self.cfg)
        if decision is Decision.STOP:
            self._bump("prune")
            return
        if decision is Decision.EMIT_AND_STOP:
            if is_vertex_critical_fast(seed, self.k):
                self._emit(seed)
            else:
                self._bump("not-critical")
            return
        key = canonical_graph6(seed)
        if not self.store.add(key):
            self._bump("duplicate")
            return
        with self.lock:
            self.stats.canonical += 1
            self.stats.levels[seed.n] = self.stats.levels.get(seed.n, 0) + 1
        n = seed.n
        clauses: set[tuple[int, int]] = set()
        for u in range(n):
            clauses |= self.clauses_through(seed, u)
        valid = self.apply_clauses(np.arange(1 << n, dtype=np.uint64), clauses)
        col = _search(seed.adj, n, self.k - 1, [])
        if self.cfg.parallel:
            jobs = list(self.children(seed, valid, col))
            with ThreadPoolExecutor(max_workers=self.cfg.workers) as pool:
                for fut in [pool.submit(self.visit_child, *job) for job in jobs]:
                    fut.result()
        else:
            for job in self.children(seed, valid, col):
                self.visit_child(*job)

    def children(self, g: Graph, valid: np.ndarray, col: list[int]):
        """Yield (parent, N, valid, colouring) for every surviving child of an expanded node."""
        cfg = self.cfg
        k = self.k
        n = g.n
        with self.lock:
            self.stats.expanded += 1
        if k >= 2 and n == k - 1 and _is_complete(g):
            # the clique clause removes K_k from ``valid``; it is the one legal clique extension
            self._emit(complete(k))
        cands = valid
        if cfg.enable_similar_pair_pruning:
            nonzero = cands[cands != 0]
            self._bump("connectivity", len(cands) - len(nonzero))
            cands = nonzero
            rules = restriction_rules(g, k)
            if rules:
                best = None
                best_rule = ""
                for X, Y in rules:
                    ok = (cands & np.uint64(X)) != 0
                    if Y:
                        uy = np.uint64(Y)
                        ok &= (cands & uy) != uy
                    cnt = int(ok.sum())
                    if best is None or cnt < best[0]:
                        best = (cnt, ok)
                        best_rule = "degree" if not Y else "xy"
                self._bump(best_rule, len(cands) - best[0])
                cands = cands[best[1]]
        if not len(cands):
            return
        if cfg.max_n is not None and n >= cfg.max_n:
            with self.lock:
                self.stats.capped = True
                self.stats.capped_nodes += 1
            return
        if n >= MAX_VERTICES:
            raise CapacityExceeded("search needs more than 64 vertices; set max_n")
        for N in cands.tolist():
            yield g, N, valid, col

    def visit_child(self, g: Graph, N: int, valid: np.ndarray, col: list[int]) -> None:
        k = self.k
        n = g.n
        self._count("visited")
        h = g.add_vertex(N)
        used = 0
        for v in bits(N):
            used |= 1 << col[v]
        free = next((c for c in range(k - 1) if not used >> c & 1), None)
        hcol = col + [free] if free is not None else _search(h.adj, h.n, k - 1, [])
        if hcol is None:
            # k-chromatic: a candidate output, never expanded
            if is_vertex_critical_fast(h, k):
                self._emit(h)
            else:
                self._bump("not-critical")
            return
        key = canonical_graph6(h)
        if not self.store.add(key):
            self._bump("duplicate")
            return
        with self.lock:
            self.stats.canonical += 1
            self.stats.levels[h.n] = self.stats.levels.get(h.n, 0) + 1
        bit = np.uint64(1 << n)
        grown = np.concatenate([valid, valid | bit])
        hvalid = self.apply_clauses(grown, self.clauses_through(h, n))
        self._bump("hfree", len(grown) - len(hvalid))
        for job in self.children(h, hvalid, hcol):
            self.visit_child(*job)


def generate(cfg: GenConfig, sink: Sink, store: CanonicalStore | None = None) -> GenStats:
    """Emit, in canonical graph6, every k-vertex-critical H-free graph containing ``cfg.seed``.

    With ``max_n`` set, graphs above it are not explored and ``stats.capped``
    records whether any node was cut off by the cap.
    """
    cfg.validate()
    own = store is None
    store = CanonicalStore(cfg.spill_threshold, cfg.spill_path) if own else store
    eng = _Engine(cfg, sink, store)
    t0 = time.perf_counter()
    try:
        eng.run_seed(cfg.seed)
    finally:
        if own:
            store.close()
    eng.stats.seconds = time.perf_counter() - t0
    return eng.stats


# -- seeds ------------------------------------------------------------------


def _has_pattern(patterns: Sequence[Graph], h: Graph) -> bool:
    from .canonical import are_isomorphic

    return any(are_isomorphic(p, h) for p in patterns)


def standard_seeds(k: int, patterns: Sequence[Graph]) -> list[Graph]:
    """Seeds covering every k-vertex-critical graph of the class.

    When P5 and W4 are both forbidden, an imperfect k-vertex-critical graph
    contains an induced C5 or 7-antihole (longer odd holes contain P5, longer
    odd antiholes contain W4), and the only perfect one is K_k.  The
    antihole on 2k-1 vertices needs no seed of its own: it is either
    forbidden or contains the 7-antihole or a C5.  Otherwise no finite seed
    list is known and ValueError is raised.
    """
    if not (_has_pattern(patterns, P5) and _has_pattern(patterns, W4)):
        raise ValueError("standard seeds are only known when P5 and W4 are forbidden")
    return [g for g in (complete(k), C5, C7BAR) if is_free(g, patterns)[0]]


def characterize(k: int, patterns: Sequence[Graph], seeds: Sequence[Graph] | None = None, sink: Sink | None = None,
                 **options) -> tuple[list[str], GenStats]:
    """Run the generator from several seeds with one shared canonical store."""
    seeds = standard_seeds(k, patterns) if seeds is None else list(seeds)
    found: list[str] = []

    def collect(g6: str) -> None:
        found.append(g6)
        if sink is not None:
            sink(g6)

    store = CanonicalStore(options.get("spill_threshold"), options.get("spill_path"))
    total = GenStats()
    try:
        for seed in seeds:
            cfg = GenConfig(k=k, patterns=list(patterns), seed=seed, **options)
            total.merge(generate(cfg, collect, store))
    finally:
        store.close()
    return found, total


__all__ = [
    "CanonicalStore", "Decision", "GenConfig", "GenStats", "InvalidConfig", "characterize",
    "expansions", "generate", "generate_reference", "is_vertex_critical_fast", "prune", "restriction_rules",
    "standard_seeds",
]
