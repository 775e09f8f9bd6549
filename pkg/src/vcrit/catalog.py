"""Catalogue files of 5-vertex-critical (P5,W4)-free graphs and their verification."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .canonical import canonical_graph6
from .color import chromatic_number
from .critical import is_k_critical_hfree, is_k_vertex_critical
from .detect import P5, W4, is_free
from .graph import Graph, load_graph6_file

ORDERS = tuple(range(5, 18))
# per-order counts for n = 5..17
VERTEX_CRITICAL_COUNTS = dict(zip(ORDERS, (1, 0, 1, 1, 44, 4, 0, 1, 8, 0, 2, 0, 2)))
CRITICAL_COUNTS = dict(zip(ORDERS, (1, 0, 1, 1, 7, 1, 0, 1, 6, 0, 1, 0, 2)))

DEFAULT_PATTERNS = (P5, W4)


def critical_path() -> Path:
    return Path(str(resources.files("vcrit") / "data" / "critical21.g6"))


@dataclass(frozen=True)
class CatalogEntry:
    g6: str          # canonical graph6
    graph: Graph
    critical: bool | None = None

    @property
    def order(self) -> int:
        return self.graph.n


@dataclass
class Catalog:
    """Entries sorted by ascending order, ties by canonical string."""

    entries: list[CatalogEntry]
    k_level: int = 5
    patterns: tuple[Graph, ...] = DEFAULT_PATTERNS

    @classmethod
    def from_graphs(cls, graphs: Iterable[Graph], k_level: int = 5, critical: bool | None = None,
                    patterns: Sequence[Graph] = DEFAULT_PATTERNS) -> Catalog:
        entries = [CatalogEntry(canonical_graph6(g), g, critical) for g in graphs]
        entries.sort(key=lambda e: (e.order, e.g6))
        return cls(entries, k_level, tuple(patterns))

    @classmethod
    def load(cls, path, k_level: int = 5, critical: bool | None = None) -> Catalog:
        return cls.from_graphs(load_graph6_file(path), k_level, critical)

    def __len__(self) -> int:
        return len(self.entries)

    def counts(self) -> dict[int, int]:
        c = Counter(e.order for e in self.entries)
        return {n: c.get(n, 0) for n in sorted(set(ORDERS) | set(c))}

    def max_order(self) -> int:
        return max((e.order for e in self.entries), default=0)


def load_critical() -> Catalog:
    return Catalog.load(critical_path(), critical=True)


def load_critical_raw() -> list[Graph]:
    """The shipped graphs in file order, with their original labels."""
    return load_graph6_file(critical_path())


@dataclass
class CheckLine:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}\t{self.name}\t{self.detail}".rstrip()


@dataclass
class CatalogReport:
    checks: list[CheckLine] = field(default_factory=list)
    per_graph: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(CheckLine(name, ok, detail))


def _fmt_counts(counts: dict[int, int]) -> str:
    return ",".join(str(counts.get(n, 0)) for n in ORDERS)


def verify_catalog(graphs: Sequence[Graph], expected: dict[int, int], k: int = 5,
                   patterns: Sequence[Graph] = DEFAULT_PATTERNS, hfree_critical: bool = False,
                   expected_total: int | None = None) -> CatalogReport:
    """Recompute every invariant of a catalogue file.

    Per graph: pattern-freeness, chromatic number ``k``, k-vertex-criticality
    and (optionally, or just recorded) H-free criticality.  Globally: pairwise
    non-isomorphism, per-order counts and the largest order.
    """
    rep = CatalogReport()
    keys = []
    n_free = n_chi = n_vc = n_hc = 0
    for idx, g in enumerate(graphs):
        free = is_free(g, patterns)[0]
        chi = chromatic_number(g)[0]
        vc = is_k_vertex_critical(g, k).passed
        hc = is_k_critical_hfree(g, k, patterns).passed if free else False
        key = canonical_graph6(g)
        keys.append(key)
        n_free += free
        n_chi += chi == k
        n_vc += vc
        n_hc += hc
        rep.per_graph.append({"index": idx, "order": g.n, "edges": g.num_edges(), "hfree": free, "chi": chi,
                              "vertex_critical": vc, "hfree_critical": hc, "canonical": key})
    total = len(graphs)
    rep.add("pattern-free", n_free == total, f"{n_free}/{total}")
    rep.add(f"chromatic-number={k}", n_chi == total, f"{n_chi}/{total}")
    rep.add("vertex-critical", n_vc == total, f"{n_vc}/{total}")
    if hfree_critical:
        rep.add("hfree-critical", n_hc == total, f"{n_hc}/{total}")
    else:
        rep.add("hfree-critical-count", True, f"{n_hc}/{total} (informational)")
    distinct = len(set(keys))
    rep.add("pairwise-non-isomorphic", distinct == total, f"{distinct} classes")
    if expected_total is not None:
        rep.add("entry-count", total == expected_total, f"{total} (expected {expected_total})")
    got = Counter(g.n for g in graphs)
    got_full = {n: got.get(n, 0) for n in ORDERS}
    extra = sorted(n for n in got if n not in ORDERS)
    counts_ok = got_full == {n: expected.get(n, 0) for n in ORDERS} and not extra
    rep.add("per-order-counts", counts_ok, f"got {_fmt_counts(got_full)} expected {_fmt_counts(expected)}")
    expected_max = max((n for n, c in expected.items() if c), default=0)
    got_max = max(got, default=0)
    rep.add("max-order", got_max == expected_max, f"{got_max} (expected {expected_max})")
    return rep


def verify_critical(graphs: Sequence[Graph] | None = None) -> CatalogReport:
    graphs = load_critical_raw() if graphs is None else graphs
    return verify_catalog(graphs, CRITICAL_COUNTS, hfree_critical=True, expected_total=21)


def verify_full(graphs: Sequence[Graph]) -> CatalogReport:
    """Checks for the 64-graph vertex-critical file; H-free criticality must hold for exactly 21."""
    rep = verify_catalog(graphs, VERTEX_CRITICAL_COUNTS, expected_total=64)
    crit = [g for g, row in zip(graphs, rep.per_graph) if row["hfree_critical"]]
    c = Counter(g.n for g in crit)
    got = {n: c.get(n, 0) for n in ORDERS}
    rep.add("hfree-critical-subset", got == CRITICAL_COUNTS and len(crit) == 21,
            f"{len(crit)} entries, counts {_fmt_counts(got)}")
    crit21 = {canonical_graph6(g) for g in load_critical_raw()}
    mine = {row["canonical"] for row in rep.per_graph if row["hfree_critical"]}
    rep.add("hfree-critical-equals-shipped", mine == crit21, f"{len(mine & crit21)} of {len(crit21)} shared")
    return rep
