"""Cayley graphs and the three equivalent perfect-code criteria.

``Cay(G, S)`` has vertex set G with x ~ y iff y*x^-1 is in S, for an
inverse-closed connection set S not containing the identity.  A subset C
is a perfect code of the graph when C is independent and every outside
vertex has exactly one neighbour in C.  For a subgroup C this is
equivalent to S + {e} being a (left or right) transversal of C, and to
every group element having exactly one factorization s*c with s in
S + {e} and c in C; all three checks live here so they can be cross
validated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContainsIdentity, NotInverseClosed
from .groups import FiniteGroup
from .subgroups import Subgroup, coset_partition

ADJACENCY_CACHE_THRESHOLD = 1024


@dataclass(frozen=True)
class ConnectionSet:
    group: FiniteGroup
    elements: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def connection_set(G: FiniteGroup, elems) -> ConnectionSet:
    """Validate e not in S and S^-1 = S, then wrap."""
    if isinstance(elems, ConnectionSet):
        if elems.group is G:
            return elems
        elems = elems.elements
    elems = tuple(sorted(set(int(s) for s in elems)))
    for s in elems:
        if not 0 <= s < G.order:
            raise ValueError(f"connection-set entry {s} out of range")
    if 0 in elems:
        raise ContainsIdentity("connection set contains the identity")
    eset = set(elems)
    for s in elems:
        if G.inverse[s] not in eset:
            raise NotInverseClosed(
                f"connection set is not inverse-closed: {s} "
                f"({G.labels[s]}) lacks its inverse"
            )
    return ConnectionSet(G, elems)


@dataclass(frozen=True)
class CayleyGraph:
    group: FiniteGroup
    connection: ConnectionSet
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def degree(self) -> int:
        return len(self.connection.elements)

    def adjacency_mask(self, v: int) -> int:
        """Neighbour bitset of v, cached; bit u set iff u ~ v."""
        got = self._cache.get(v)
        if got is None:
            table = self.group.table
            got = 0
            for s in self.connection.elements:
                got |= 1 << table[s][v]
            self._cache[v] = got
        return got

    def neighbors(self, v: int) -> tuple[int, ...]:
        # y ~ v iff y = s*v for some s in S; recomputed on demand below the
        # cache threshold, served from the bitset cache above it
        if self.group.order < ADJACENCY_CACHE_THRESHOLD:
            table = self.group.table
            return tuple(table[s][v] for s in self.connection.elements)
        mask = self.adjacency_mask(v)
        return tuple(u for u in range(self.group.order) if mask >> u & 1)

    def edge_count(self) -> int:
        return self.group.order * self.degree // 2


def build_cayley(G: FiniteGroup, S) -> CayleyGraph:
    return CayleyGraph(G, connection_set(G, S))


def is_perfect_code_graph(graph: CayleyGraph, code) -> bool:
    """True iff ``code`` is independent and dominates every outside vertex once."""
    n = graph.group.order
    cset = set(int(c) for c in code)
    for c in cset:
        if not 0 <= c < n:
            raise ValueError(f"code vertex {c} out of range")
    if n >= ADJACENCY_CACHE_THRESHOLD:
        code_mask = 0
        for c in cset:
            code_mask |= 1 << c
        for v in range(n):
            hits = (graph.adjacency_mask(v) & code_mask).bit_count()
            if (hits != 0) if v in cset else (hits != 1):
                return False
        return True
    for v in range(n):
        hits = sum(1 for u in graph.neighbors(v) if u in cset)
        if v in cset:
            if hits:
                return False
        elif hits != 1:
            return False
    return True


@dataclass(frozen=True)
class MultiplicityMap:
    """Counts of factorizations g = s*c with s in S + {e}, c in C."""

    group: FiniteGroup
    counts: tuple[int, ...]

    def is_all_ones(self) -> bool:
        return all(c == 1 for c in self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_json(self) -> dict:
        return {"counts": list(self.counts), "all_ones": self.is_all_ones()}


def group_ring_product_check(G: FiniteGroup, S, C) -> MultiplicityMap:
    """Multiplicity of each g among products (S + {e}) * C.

    The pair (S, C) is a perfect-code configuration exactly when the map
    is identically one.  The whole map is returned so that failures carry
    which elements are missed or doubly covered.
    """
    S = connection_set(G, S)
    counts = [0] * G.order
    table = G.table
    code = sorted(set(int(c) for c in C))
    for s in (0,) + S.elements:
        row = table[s]
        for c in code:
            counts[row[c]] += 1
    return MultiplicityMap(G, tuple(counts))


@dataclass(frozen=True)
class Transversal:
    """A system of coset representatives; ``reps`` is sorted, so e leads."""

    subgroup: Subgroup
    side: str
    reps: tuple[int, ...]

    def contains_identity(self) -> bool:
        return self.reps and self.reps[0] == 0

    def is_inverse_closed(self) -> bool:
        inv = self.subgroup.group.inverse
        rset = set(self.reps)
        return all(inv[t] in rset for t in self.reps)


def is_transversal(G: FiniteGroup, H: Subgroup, T, side: str) -> bool:
    """True iff T hits every (left|right) coset of H exactly once."""
    reps = sorted(set(int(t) for t in T))
    if len(reps) != G.order // H.order:
        return False
    cid, parts = coset_partition(G, H.elements, side)
    hit = [False] * len(parts)
    for t in reps:
        k = cid[t]
        if hit[k]:
            return False
        hit[k] = True
    return all(hit)


def export_dot(graph: CayleyGraph, highlight=()) -> str:
    """DOT text with group labels; highlight set drawn filled.

    Output ordering is deterministic: vertices ascending, then each edge
    once from its smaller endpoint.
    """
    marked = set(int(h) for h in highlight)
    lines = ["graph cayley {"]
    for v in range(graph.group.order):
        label = graph.group.labels[v].replace('"', '\\"')
        attrs = f'label="{label}"'
        if v in marked:
            attrs += ", style=filled, fillcolor=gold"
        lines.append(f"  {v} [{attrs}];")
    for v in range(graph.group.order):
        for u in graph.neighbors(v):
            if v < u:
                lines.append(f"  {v} -- {u};")
    lines.append("}")
    return "\n".join(lines) + "\n"
