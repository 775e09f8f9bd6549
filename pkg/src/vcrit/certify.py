"""Certifying k-colourability: a k-colouring, or a (k+1)-vertex-critical induced subgraph."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .catalog import Catalog
from .color import Coloring, is_k_colorable
from .critical import is_k_vertex_critical
from .detect import find_induced, is_free
from .graph import Graph, bits, to_mask


class CatalogMismatch(ValueError):
    pass


class CatalogIncomplete(RuntimeError):
    pass


class NotApplicable(ValueError):
    pass


class Variant(str, Enum):
    COLORING = "coloring"
    WITNESS = "critical-witness"


@dataclass(frozen=True)
class Certificate:
    variant: Variant
    coloring: Coloring | None = None
    witness: int | None = None          # vertex bitset
    catalog_id: int | None = None

    def vertices(self) -> list[int]:
        return list(bits(self.witness or 0))

    def line(self) -> str:
        if self.variant is Variant.COLORING:
            return " ".join(["COLORING", str(self.coloring.k)] + [str(c) for c in self.coloring.colors])
        cid = "-" if self.catalog_id is None else str(self.catalog_id)
        return " ".join(["WITNESS", cid] + [str(v) for v in self.vertices()])


def parse_certificate(line: str) -> Certificate:
    parts = line.split()
    if not parts:
        raise ValueError("empty certificate line")
    try:
        if parts[0] == "COLORING":
            k = int(parts[1])
            return Certificate(Variant.COLORING, coloring=Coloring(tuple(int(c) for c in parts[2:]), k))
        if parts[0] == "WITNESS":
            cid = None if parts[1] == "-" else int(parts[1])
            return Certificate(Variant.WITNESS, witness=to_mask(int(v) for v in parts[2:]), catalog_id=cid)
    except (IndexError, ValueError) as exc:
        raise ValueError(f"malformed certificate: {line!r}") from exc
    raise ValueError(f"unknown certificate kind {parts[0]!r}")


def peel_to_critical(g: Graph, k: int) -> int:
    """Vertex set of a (k+1)-vertex-critical induced subgraph of a graph with chi > k.

    Vertices are scanned once in index order, each deleted while the rest
    still needs k+1 colours.  A single pass reaches the fixpoint: a vertex
    whose deletion left the graph k-colourable stays undeletable in every
    subgraph where it survives.
    """
    if is_k_colorable(g, k) is not None:
        raise NotApplicable(f"graph is {k}-colourable")
    keep = g.vertex_mask
    for v in range(g.n):
        rest = keep & ~(1 << v)
        if is_k_colorable(g.induced_subgraph(rest), k) is None:
            keep = rest
    return keep


def certify(g: Graph, k: int, catalog: Catalog | None = None) -> Certificate:
    if catalog is not None and catalog.k_level != k + 1:
        raise CatalogMismatch(f"catalogue lists {catalog.k_level}-vertex-critical graphs, need {k + 1}")
    col = is_k_colorable(g, k)
    if col is not None:
        return Certificate(Variant.COLORING, coloring=col)
    if catalog is not None and is_free(g, catalog.patterns)[0]:
        # smallest entries first: they are the cheapest to find and to verify
        for idx, entry in enumerate(catalog.entries):
            if entry.order > g.n:
                break
            emb = find_induced(g, entry.graph)
            if emb is not None:
                return Certificate(Variant.WITNESS, witness=to_mask(emb), catalog_id=idx)
        raise CatalogIncomplete("non-colourable graph of the class contains no catalogue entry")
    return Certificate(Variant.WITNESS, witness=peel_to_critical(g, k))


def verify_certificate(g: Graph, k: int, c: Certificate, catalog: Catalog | None = None) -> bool:
    """Recheck a certificate from scratch; nothing in it is trusted."""
    if c.variant is Variant.COLORING:
        col = c.coloring
        if col is None or len(col.colors) != g.n or col.k > k:
            return False
        return all(0 <= x < k for x in col.colors) and col.is_proper(g)
    if c.witness is None or c.witness & ~g.vertex_mask or not c.witness:
        return False
    sub = g.induced_subgraph(c.witness)
    if not is_k_vertex_critical(sub, k + 1).passed:
        return False
    if catalog is not None and c.catalog_id is not None:
        from .canonical import are_isomorphic

        if not 0 <= c.catalog_id < len(catalog.entries):
            return False
        return are_isomorphic(sub, catalog.entries[c.catalog_id].graph)
    return True


__all__ = [
    "CatalogIncomplete", "CatalogMismatch", "Certificate", "NotApplicable", "Variant", "certify",
    "parse_certificate", "peel_to_critical", "verify_certificate",
]
