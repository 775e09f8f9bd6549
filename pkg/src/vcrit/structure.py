"""Neighbourhood partitions around an induced 5-hole or 7-antihole, with checkers.

Cycle positions are 1-based and taken modulo 5 (resp. 7); ``base[0]`` is
``v1``.  Each property checker runs on arbitrary graphs and, for every
violation, returns the vertices of the induced P5, W4 or C5 that the
violation forces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .detect import C5, C7BAR, P5, W4, find_induced, is_embedding
from .graph import Graph, GraphError, bits, to_mask

PATTERNS = {"P5": P5, "W4": W4, "C5": C5}


class UnclassifiedVertex(GraphError):
    def __init__(self, vertex: int, signature: tuple[int, ...], reason: str, witness: tuple[int, ...] | None = None):
        self.vertex = vertex
        self.signature = signature
        self.reason = reason
        self.witness = witness
        super().__init__(f"vertex {vertex} with cycle neighbours {list(signature)}: {reason}")


class Mix(str, Enum):
    COMPLETE = "complete"
    ANTICOMPLETE = "anticomplete"
    MIXED = "mixed"


def mixed_on(g: Graph, v: int, s: int) -> Mix:
    hit = g.adj[v] & s
    if hit == s:
        return Mix.COMPLETE
    if not hit:
        return Mix.ANTICOMPLETE
    return Mix.MIXED


def check_mix_lemma(g: Graph, a: int, h: int) -> list[tuple[int, int]]:
    """Counterexamples ``(v, component)`` to: not mixed on any edge ⇒ not mixed on any component.

    The lemma is unconditional, so a correct implementation always returns [].
    """
    bad = []
    comps = g.components(h)
    for v in bits(a):
        if any(mixed_on(g, v, (1 << x) | (1 << y)) is Mix.MIXED for x in bits(h) for y in bits(g.adj[x] & h)):
            continue
        for comp in comps:
            if mixed_on(g, v, comp) is Mix.MIXED:
                bad.append((v, comp))
    return bad


@dataclass
class PropertyReport:
    prop: str
    index: int | None
    holds: bool
    violation: tuple[int, ...] = ()
    witness: tuple[int, ...] = ()
    pattern: str = ""

    def line(self) -> str:
        pid = self.prop if self.index is None else f"{self.prop}[{self.index}]"
        parts = [pid, "true" if self.holds else "false"]
        parts += [str(v) for v in self.witness]
        return " ".join(parts)


def _find_obstruction(g: Graph, vertices: Sequence[int], names: Sequence[str]) -> tuple[str, tuple[int, ...]] | None:
    mask = to_mask(vertices)
    for name in names:
        emb = find_induced(g, PATTERNS[name], within=mask)
        if emb is not None:
            return name, emb
    return None


def _as_pattern(g: Graph, vertices: Sequence[int], names: Sequence[str]) -> tuple[str, tuple[int, ...]] | None:
    """Order ``vertices`` as an embedding of one of ``names`` if they induce it."""
    if len(set(vertices)) != len(vertices):
        return None
    return _find_obstruction(g, vertices, names) if len(vertices) == 5 else None


class _Checker:
    """Collects one report per (property, index), keeping the first violation."""

    def __init__(self, g: Graph, base: Sequence[int], names: Sequence[str]):
        self.g = g
        self.base = tuple(base)
        self.names = tuple(names)
        self.reports: dict[tuple[str, int | None], PropertyReport] = {}

    def declare(self, prop: str, index: int | None) -> None:
        self.reports.setdefault((prop, index), PropertyReport(prop, index, True))

    def fail(self, prop: str, index: int | None, violation: tuple[int, ...], proof: Sequence[int]) -> None:
        rep = self.reports.setdefault((prop, index), PropertyReport(prop, index, True))
        if not rep.holds:
            return
        found = _as_pattern(self.g, proof, self.names)
        if found is None:
            # the constructive witness did not apply; search the local neighbourhood instead
            local = set(self.base) | set(violation)
            found = _find_obstruction(self.g, sorted(local), self.names)
        rep.holds = False
        rep.violation = violation
        if found is not None:
            rep.pattern, rep.witness = found[0], tuple(found[1])

    def result(self) -> list[PropertyReport]:
        return list(self.reports.values())


# -- around an induced C5 ---------------------------------------------------


def _pos5(i: int) -> int:
    return (i - 1) % 5 + 1


@dataclass
class C5Partition:
    base: tuple[int, ...]
    s0: int = 0
    s2: dict[int, int] = field(default_factory=lambda: dict.fromkeys(range(1, 6), 0))
    s31: dict[int, int] = field(default_factory=lambda: dict.fromkeys(range(1, 6), 0))
    s32: dict[int, int] = field(default_factory=lambda: dict.fromkeys(range(1, 6), 0))
    s4: dict[int, int] = field(default_factory=lambda: dict.fromkeys(range(1, 6), 0))
    s5: int = 0

    def v(self, i: int) -> int:
        """Host vertex at cycle position ``i`` (any integer, reduced mod 5)."""
        return self.base[(i - 1) % 5]

    def classes(self) -> dict[str, int]:
        out = {"S0": self.s0, "S5": self.s5}
        for i in range(1, 6):
            out[f"S2({i})"] = self.s2[i]
            out[f"S3_1({i})"] = self.s31[i]
            out[f"S3_2({i})"] = self.s32[i]
            out[f"S4({i})"] = self.s4[i]
        return out


def c5_signature_class(sig: frozenset[int]) -> tuple[str, int | None] | None:
    """Class name and index for a set of cycle positions, or None if no class matches."""
    if not sig:
        return "s0", None
    if len(sig) == 5:
        return "s5", None
    for i in range(1, 6):
        p = lambda d: _pos5(i + d)  # noqa: E731
        if sig == {p(-1), p(1)}:
            return "s2", i
        if sig == {p(-1), p(0), p(1)}:
            return "s31", i
        if sig == {p(-2), p(0), p(2)}:
            return "s32", i
        if sig == {p(-2), p(-1), p(1), p(2)}:
            return "s4", i
    return None


def partition_around_c5(g: Graph, emb: Sequence[int]) -> C5Partition:
    if not is_embedding(g, C5, emb):
        raise GraphError("embedding is not an induced C5")
    part = C5Partition(tuple(emb))
    pos = {v: i + 1 for i, v in enumerate(emb)}
    cmask = to_mask(emb)
    for v in bits(g.vertex_mask & ~cmask):
        sig = frozenset(pos[u] for u in bits(g.adj[v] & cmask))
        cls = c5_signature_class(sig)
        if cls is None:
            local = _find_obstruction(g, list(emb) + [v], ("P5", "W4"))
            raise UnclassifiedVertex(v, tuple(sorted(sig)), "neighbourhood on the 5-hole matches no class",
                                     local[1] if local else None)
        name, i = cls
        if i is None:
            setattr(part, name, getattr(part, name) | (1 << v))
        else:
            getattr(part, name)[i] |= 1 << v
    return part


def _members(mask: int) -> list[int]:
    return list(bits(mask))


def verify_c5_properties(g: Graph, p: C5Partition) -> list[PropertyReport]:
    """Check the sixteen structural properties of a (P5,W4)-free graph around a 5-hole."""
    ck = _Checker(g, p.base, ("P5", "W4"))
    adj = g.adj
    S2, S31, S32, S4 = p.s2, p.s31, p.s32, p.s4

    def cls(table, i):
        return table[_pos5(i)]

    def edges_in(mask):
        return [(u, w) for u in bits(mask) for w in bits(adj[u] & mask) if u < w]

    def nonedges_in(mask):
        return [(u, w) for u in bits(mask) for w in bits(mask & ~adj[u]) if u < w]

    def mixed_pairs(mask, vset):
        """(u, u', v): edge uu' in mask, v adjacent to u but not u'."""
        out = []
        for a, b in edges_in(mask):
            for v in bits(vset):
                ha, hb = adj[v] >> a & 1, adj[v] >> b & 1
                if ha and not hb:
                    out.append((b, a, v))
                elif hb and not ha:
                    out.append((a, b, v))
        return out

    def mixed_on_consecutive(v):
        for j in range(1, 6):
            a, b = p.v(j), p.v(j + 1)
            if adj[v] >> a & 1 and not adj[v] >> b & 1:
                return a, b
            if adj[v] >> b & 1 and not adj[v] >> a & 1:
                return b, a
        return None

    for prop in map(str, range(1, 17)):
        for i in ((None,) if prop in ("1", "15") else range(1, 6)):
            ck.declare(prop, i)

    # (1) S0 anticomplete to S2 ∪ S3^1
    for i in range(1, 6):
        V = lambda d: p.v(i + d)  # noqa: E731
        for u in bits(p.s0):
            for v in bits(adj[u] & (S2[i] | S31[i])):
                ck.fail("1", None, (u, v), (u, v, V(1), V(2), V(3)))

    for i in range(1, 6):
        # (2) S3^2(i) ∪ S4(i) not mixed on any edge of S0
        for u_, u, v in mixed_pairs(p.s0, S32[i] | S4[i]):
            pair = mixed_on_consecutive(v)
            proof = (u_, u, v) + pair if pair else ()
            ck.fail("2", i, (u, u_, v), proof)

        for s in (1, -1):
            V = lambda d: p.v(i + s * d)  # noqa: E731
            # (3) S2(i) complete to S2(i+s) ∪ S3^1(i+s)
            for u in bits(S2[i]):
                for v in bits((cls(S2, i + s) | cls(S31, i + s)) & ~adj[u]):
                    ck.fail("3", i, (u, v), (u, V(-1), V(0), v, V(2)))
            # (4) S2(i+2s) ∪ S3^2(i+s) not mixed on any edge of S2(i)
            for u_, u, v in mixed_pairs(S2[i], cls(S2, i + 2 * s) | cls(S32, i + s)):
                ck.fail("4", i, (u, u_, v), (u_, u, v, V(3), V(2)))
            # (6) S2(i) anticomplete to S3^1(i+2s)
            for u in bits(S2[i]):
                for v in bits(adj[u] & cls(S31, i + 2 * s)):
                    ck.fail("6", i, (u, v), (V(0), V(-1), u, v, V(2)))
            # (8) S3^2(i+2s) not mixed on any edge of S2(i)
            for u_, u, v in mixed_pairs(S2[i], cls(S32, i + 2 * s)):
                ck.fail("8", i, (u, u_, v), (u_, u, v, V(2), V(3)))
            # (10) S2(i) complete to S4(i+s)
            for u in bits(S2[i]):
                for v in bits(cls(S4, i + s) & ~adj[u]):
                    ck.fail("10", i, (u, v), (u, V(1), V(0), v, V(3)))
            # (11) no vertex of S2(i+2s) complete to a nonadjacent pair of S3^2(i)
            for u, u_ in nonedges_in(S32[i]):
                for v in bits(adj[u] & adj[u_] & cls(S2, i + 2 * s)):
                    ck.fail("11", i, (u, u_, v), (V(3), u, V(2), u_, v))
            # (13) S3^2(i) complete to S3^2(i+s)
            for u in bits(S32[i]):
                for v in bits(cls(S32, i + s) & ~adj[u]):
                    ck.fail("13", i, (u, v), (u, V(2), V(1), v, V(-1)))
            # (14) S3^2(i) complete to S3^1(i+2s)
            for u in bits(S32[i]):
                for v in bits(cls(S31, i + 2 * s) & ~adj[u]):
                    ck.fail("14", i, (u, v), (v, V(2), u, V(0), V(-1)))

        V = lambda d: p.v(i + d)  # noqa: E731
        # (5) S2(i) anticomplete to S3^1(i)
        for u in bits(S2[i]):
            for v in bits(adj[u] & S31[i]):
                ck.fail("5", i, (u, v), (v, u, V(-1), V(0), V(1)))
        # (7) S2(i) complete to S3^2(i)
        for u in bits(S2[i]):
            for v in bits(S32[i] & ~adj[u]):
                ck.fail("7", i, (u, v), (u, V(-1), V(0), v, V(2)))
        # (9) no vertex of S3^2(i±1) ∪ S4(i) ∪ S4(i±2) ∪ S5 complete to a nonadjacent pair of S2(i)
        hubs = (cls(S32, i + 1) | cls(S32, i - 1) | S4[i] | cls(S4, i + 2) | cls(S4, i - 2) | p.s5)
        for u, u_ in nonedges_in(S2[i]):
            for v in bits(adj[u] & adj[u_] & hubs):
                ck.fail("9", i, (u, u_, v), (v, u, V(1), u_, V(-1)))
        # (12) S3^2(i) complete to S3^1(i)
        for u in bits(S32[i]):
            for v in bits(S31[i] & ~adj[u]):
                ck.fail("12", i, (u, v), (V(1), v, V(-1), V(-2), u))
        # (16) S2(i) and S3^2(i) are P3-free
        for table, centre in ((S2, i), (S32, i - 1)):
            W = lambda d: p.v(centre + d)  # noqa: E731
            mask = table[i]
            for mid in bits(mask):
                for u, w in nonedges_in(adj[mid] & mask):
                    ck.fail("16", i, (u, mid, w), (mid, u, W(1), w, W(-1)))

    # (15) S3^1(i), S4(i) and S5 are cliques
    groups = [(S31[i], i) for i in range(1, 6)] + [(S4[i], i + 2) for i in range(1, 6)] + [(p.s5, 1)]
    for mask, centre in groups:
        W = lambda d: p.v(centre + d)  # noqa: E731
        for u, v in nonedges_in(mask):
            ck.fail("15", None, (u, v), (W(0), u, W(1), v, W(-1)))

    return ck.result()


# -- around an induced 7-antihole -------------------------------------------


def _pos7(i: int) -> int:
    return (i - 1) % 7 + 1


@dataclass
class C7barPartition:
    base: tuple[int, ...]
    s3: dict[int, int] = field(default_factory=lambda: dict.fromkeys(range(1, 8), 0))
    s5: dict[int, int] = field(default_factory=lambda: dict.fromkeys(range(1, 8), 0))

    def v(self, i: int) -> int:
        return self.base[(i - 1) % 7]

    def classes(self) -> dict[str, int]:
        out = {}
        for i in range(1, 8):
            out[f"S3({i})"] = self.s3[i]
            out[f"S5({i})"] = self.s5[i]
        return out


def _c7bar_reason(sig: frozenset[int]) -> str:
    size = len(sig)
    for i in range(1, 8):
        if {_pos7(i), _pos7(i + 1), _pos7(i - 2), _pos7(i - 3)} <= sig:
            return f"adjacent to v{_pos7(i)}, v{_pos7(i + 1)}, v{_pos7(i - 2)}, v{_pos7(i - 3)} (forces W4)"
    if size == 4:
        return "four neighbours on the antihole (forces W4 or C5)"
    for i in range(1, 8):
        if {_pos7(i), _pos7(i + 1)} <= sig and not sig & {_pos7(i - 1), _pos7(i + 2)}:
            return f"adjacent to v{_pos7(i)}, v{_pos7(i + 1)} but not v{_pos7(i - 1)}, v{_pos7(i + 2)} (forces C5)"
    for i in range(1, 8):
        if _pos7(i) in sig and not sig & {_pos7(i - 1), _pos7(i + 1), _pos7(i + 2)}:
            return f"adjacent to v{_pos7(i)} but not v{_pos7(i - 1)}, v{_pos7(i + 1)}, v{_pos7(i + 2)} (forces P5)"
    if not sig:
        return "no neighbour on the antihole (forces P5 or a disconnected graph)"
    return "neighbourhood on the antihole matches no class"


def partition_around_c7bar(g: Graph, emb: Sequence[int]) -> C7barPartition:
    """Classify outside vertices into S3(i) and S5(i).

    S3(i) has neighbours {v_{i-1}, v_i, v_{i+1}} on the antihole and S5(i) has
    {v_{i-2}, v_{i-1}, v_i, v_{i+1}, v_{i+3}}.
    """
    if not is_embedding(g, C7BAR, emb):
        raise GraphError("embedding is not an induced 7-antihole in the v_i v_j ⇔ 1<|i-j|<6 convention")
    part = C7barPartition(tuple(emb))
    pos = {v: i + 1 for i, v in enumerate(emb)}
    cmask = to_mask(emb)
    names = ("P5", "W4", "C5")
    for v in bits(g.vertex_mask & ~cmask):
        sig = frozenset(pos[u] for u in bits(g.adj[v] & cmask))
        placed = False
        for i in range(1, 8):
            if sig == {_pos7(i - 1), _pos7(i), _pos7(i + 1)}:
                part.s3[i] |= 1 << v
                placed = True
                break
            if sig == {_pos7(i - 2), _pos7(i - 1), _pos7(i), _pos7(i + 1), _pos7(i + 3)}:
                part.s5[i] |= 1 << v
                placed = True
                break
        if placed:
            continue
        local = list(emb) + [v]
        found = _find_obstruction(g, local, names)
        if found is None and not sig:
            # S0 vertex: the obstruction runs through a neighbour
            for w in bits(g.adj[v] & ~cmask):
                found = _find_obstruction(g, local + [w], names)
                if found:
                    break
        raise UnclassifiedVertex(v, tuple(sorted(sig)), _c7bar_reason(sig), found[1] if found else None)
    return part


def verify_c7bar_properties(g: Graph, p: C7barPartition) -> list[PropertyReport]:
    """Check the S5-clique claim and facts (IV)-(VIII) around a 7-antihole."""
    ck = _Checker(g, p.base, ("P5", "W4", "C5"))
    adj = g.adj
    S3, S5 = p.s3, p.s5

    def s3(i):
        return S3[_pos7(i)]

    def s5(i):
        return S5[_pos7(i)]

    for prop in ("S5-clique", "IV", "V", "VI", "VII", "VIII"):
        for i in range(1, 8):
            ck.declare(prop, i)

    for i in range(1, 8):
        V = lambda d: p.v(i + d)  # noqa: E731
        # S5(i) is a clique
        for u in bits(S5[i]):
            for v in bits(S5[i] & ~adj[u]):
                if u < v:
                    ck.fail("S5-clique", i, (u, v), (V(3), u, V(0), v, V(1)))
        for s in (1, -1):
            W = lambda d: p.v(i + s * d)  # noqa: E731
            for u in bits(S3[i]):
                # (IV) anticomplete to S3(i±1)
                for v in bits(adj[u] & s3(i + s)):
                    ck.fail("IV", i, (u, v), (u, v, W(2), W(-2), W(3)))
                # (V) anticomplete to S3(i±2)
                for v in bits(adj[u] & s3(i + 2 * s)):
                    ck.fail("V", i, (u, v), (W(1), u, W(-1), W(3), v))
                # (VI) anticomplete to S3(i±3)
                for v in bits(adj[u] & s3(i + 3 * s)):
                    ck.fail("VI", i, (u, v), (W(-2), W(1), u, v, W(2)))
        # (VII) S5 minus S5(i+4) not mixed on any component of S3(i)
        others = 0
        for j in range(1, 8):
            if _pos7(j) != _pos7(i + 4):
                others |= S5[j]
        far = [V(d) for d in range(2, 6)]
        for comp in g.components(S3[i]):
            for v in bits(others):
                if mixed_on(g, v, comp) is not Mix.MIXED:
                    continue
                proof: tuple[int, ...] = ()
                for a in bits(comp):
                    for b in bits(adj[a] & comp):
                        if adj[v] >> b & 1 and not adj[v] >> a & 1:
                            for x in far:
                                for y in far:
                                    if adj[x] >> y & 1 and adj[v] >> x & 1 and not adj[v] >> y & 1:
                                        proof = (a, b, v, x, y)
                                        break
                                if proof:
                                    break
                        if proof:
                            break
                    if proof:
                        break
                ck.fail("VII", i, (v,) + tuple(bits(comp)), proof)
        # (VIII) S3(i) complete to S5(i+4)
        for u in bits(S3[i]):
            for v in bits(s5(i + 4) & ~adj[u]):
                ck.fail("VIII", i, (u, v), (u, V(1), V(3), v, V(2)))

    return ck.result()


def all_hold(reports: Sequence[PropertyReport]) -> bool:
    return all(r.holds for r in reports)


def report_lines(reports: Sequence[PropertyReport]) -> list[str]:
    return [r.line() for r in reports]


