"""Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets.

A :class:`Graph` is an immutable value.  Vertex sets are plain Python ints
used as bitsets (bit ``v`` set means vertex ``v`` is a member); every
mutation returns a new graph.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
MAX_GRAPH6_VERTICES = 62


class GraphError(ValueError):
    """Base class for invalid graph construction or input."""


class CapacityExceeded(GraphError):
    pass


class InvalidEdge(GraphError):
    pass


class InvalidVertex(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple graph with ``adj[v]`` the neighbour bitset of ``v``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int] | None = None, *, check: bool = True):
        if n < 0 or n > MAX_VERTICES:
            raise CapacityExceeded(f"graph on {n} vertices exceeds capacity {MAX_VERTICES}")
        if adj is None:
            adj = (0,) * n
        adj = tuple(adj)
        if check:
            if len(adj) != n:
                raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~full:
                    raise InvalidEdge(f"vertex {v} has a neighbour outside 0..{n - 1}")
                if row >> v & 1:
                    raise InvalidEdge(f"loop at vertex {v}")
                for u in bits(row):
                    if not adj[u] >> v & 1:
                        raise InvalidEdge(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj
        self._hash = None

    # -- basic queries -------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self) -> int:
        return self.n

    # -- mutation by copy ----------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} not in 0..{self.n - 1}")

    def induced_subgraph(self, vertices: int | Iterable[int]) -> Graph:
        """Subgraph induced by a vertex bitset (or iterable), relabelled in increasing order."""
        mask = vertices if isinstance(vertices, int) else to_mask(vertices)
        if mask & ~self.vertex_mask:
            raise InvalidVertex("vertex set contains indices outside the graph")
        keep = list(bits(mask))
        if len(keep) == self.n:
            return self
        return self.relabel_subset(keep)

    def relabel_subset(self, order: Sequence[int]) -> Graph:
        """Graph induced by ``order`` where ``order[i]`` becomes vertex ``i``."""
        pos = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            row = 0
            for u in bits(self.adj[v]):
                i = pos.get(u)
                if i is not None:
                    row |= 1 << i
            adj.append(row)
        return Graph(len(order), adj, check=False)

    def permute(self, perm: Sequence[int]) -> Graph:
        """Relabel so that old vertex ``v`` becomes ``perm[v]``."""
        inverse = [0] * self.n
        for v, p in enumerate(perm):
            inverse[p] = v
        return self.relabel_subset(inverse)

    def delete_vertex(self, v: int) -> Graph:
        self._check_vertex(v)
        return self.induced_subgraph(self.vertex_mask & ~(1 << v))

    def delete_edge(self, u: int, v: int) -> Graph:
        self._check_vertex(u)
        self._check_vertex(v)
        if not self.has_edge(u, v):
            raise InvalidEdge(f"{u}{v} is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj, check=False)

    def add_vertex(self, neighbors: int) -> Graph:
        """Append a new vertex ``n`` adjacent to the bitset ``neighbors``."""
        n = self.n
        if n + 1 > MAX_VERTICES:
            raise CapacityExceeded(f"cannot grow beyond {MAX_VERTICES} vertices")
        if neighbors & ~self.vertex_mask:
            raise InvalidVertex("new neighbourhood references missing vertices")
        bit = 1 << n
        adj = [row | bit if neighbors >> v & 1 else row for v, row in enumerate(self.adj)]
        adj.append(neighbors)
        return Graph(n + 1, adj, check=False)

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, [full & ~row & ~(1 << v) for v, row in enumerate(self.adj)], check=False)

    def disjoint_union(self, other: Graph) -> Graph:
        n = self.n + other.n
        if n > MAX_VERTICES:
            raise CapacityExceeded(f"disjoint union needs {n} vertices")
        shift = self.n
        return Graph(n, list(self.adj) + [row << shift for row in other.adj], check=False)

    def join(self, other: Graph) -> Graph:
        """Disjoint union plus every edge between the two sides."""
        union = self.disjoint_union(other)
        left = self.vertex_mask
        right = union.vertex_mask & ~left
        adj = [row | (right if v < self.n else left) for v, row in enumerate(union.adj)]
        return Graph(union.n, adj, check=False)

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_stable(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def components(self, mask: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``mask``, as bitsets."""
        if mask is None:
            mask = self.vertex_mask
        comps = []
        remaining = mask
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                reach = 0
                for v in bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & remaining & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n > MAX_VERTICES:
        raise CapacityExceeded(f"graph on {n} vertices exceeds capacity {MAX_VERTICES}")
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge {u}{v} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, check=False)


# -- named graphs ---------------------------------------------------------

def complete(n: int) -> Graph:
    full = (1 << n) - 1
    if n > MAX_VERTICES:
        raise CapacityExceeded(f"K{n} exceeds capacity")
    return Graph(n, [full & ~(1 << v) for v in range(n)], check=False)


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_complement(n: int) -> Graph:
    return cycle(n).complement()


def wheel4() -> Graph:
    """C4 on 0..3 plus hub 4 adjacent to every rim vertex."""
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def named_graph(name: str) -> Graph:
    """Parse names like ``K5``, ``P5``, ``C7``, ``C7bar`` (also ``co-C7``, ``complement-of-C7``) and ``W4``."""
    key = name.strip().replace("_", "")
    upper = key.upper()
    complemented = False
    if upper.startswith("COMPLEMENT-OF-"):
        upper = upper[len("COMPLEMENT-OF-"):]
        complemented = True
    if upper == "W4":
        return wheel4()
    if upper == "PETERSEN":
        return petersen()
    for suffix in ("BAR", "-BAR"):
        if upper.endswith(suffix):
            upper = upper[: -len(suffix)].rstrip("-")
            complemented = True
    if upper.startswith("CO-") or upper.startswith("CO"):
        upper = upper[3:] if upper.startswith("CO-") else upper[2:]
        complemented = True
    if len(upper) < 2 or upper[0] not in "KPC" or not upper[1:].isdigit():
        raise GraphError(f"unknown graph name {name!r}")
    n = int(upper[1:])
    if n > MAX_VERTICES:
        raise CapacityExceeded(f"{name} exceeds capacity")
    g = {"K": complete, "P": path, "C": cycle}[upper[0]](n)
    return g.complement() if complemented else g


# -- graph6 ---------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_GRAPH6_VERTICES:
        raise CapacityExceeded(f"short graph6 supports at most {MAX_GRAPH6_VERTICES} vertices")
    out = [chr(63 + n)]
    acc = 0
    count = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            count += 1
            if count == 6:
                out.append(chr(63 + acc))
                acc = 0
                count = 0
    if count:
        out.append(chr(63 + (acc << (6 - count))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise MalformedGraph6("empty graph6 line")
    codes = [ord(c) - 63 for c in line]
    if any(c < 0 or c > 63 for c in codes):
        raise MalformedGraph6(f"byte outside 63..126 in {text!r}")
    n = codes[0]
    if n == 63:
        raise CapacityExceeded("long-form graph6 headers are not supported")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(codes) != expected:
        raise MalformedGraph6(f"graph6 line for n={n} must have {expected} bytes, got {len(codes)}")
    adj = [0] * n
    k = 0
    body = codes[1:]
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj, check=False)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a multi-graph graph6 stream, skipping blanks and ``#`` comments."""
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield parse_graph6(line)


def load_graph6_file(path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return list(read_graph6_lines(fh))
