"""Subgroups, cosets, normality, conjugates, complements and enumeration.

A :class:`Subgroup` is a closed, identity-containing subset of a parent
group, stored as a sorted tuple of element ids.  Full enumeration
(:func:`all_subgroups`) is gated by an order bound (default 512, override
via the ``PERFCODE_ORDER_BOUND`` environment variable) because it is
exponential in the worst case.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import NotAbelian, OrderBoundExceeded
from .groups import FiniteGroup, element_orders

DEFAULT_ORDER_BOUND = 512


def resolve_order_bound(bound: int | None = None) -> int:
    if bound is not None:
        return bound
    env = os.environ.get("PERFCODE_ORDER_BOUND")
    if env:
        return int(env)
    return DEFAULT_ORDER_BOUND


@dataclass(frozen=True)
class Subgroup:
    group: FiniteGroup
    elements: tuple[int, ...]
    gens: tuple[int, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.group.order // len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in set(self.elements)

    def __repr__(self):
        return f"Subgroup(order={self.order}, elements={list(self.elements)})"


@dataclass(frozen=True)
class Coset:
    subgroup: Subgroup
    representative: int
    side: str  # "left" | "right"
    elements: tuple[int, ...]

    def __repr__(self):
        return f"Coset({self.side}, rep={self.representative}, {list(self.elements)})"


def subgroup_from_elements(G: FiniteGroup, elems) -> Subgroup:
    """Validate closure and identity membership, then wrap as a Subgroup."""
    elems = tuple(sorted(set(int(e) for e in elems)))
    if not elems or elems[0] != 0:
        raise ValueError("a subgroup must contain the identity (id 0)")
    eset = set(elems)
    table = G.table
    for a in elems:
        if not 0 <= a < G.order:
            raise ValueError(f"element id {a} out of range")
        for b in elems:
            if table[a][b] not in eset:
                raise ValueError(f"subset not closed: {a}*{b} is outside")
    return Subgroup(G, elems, gens=elems)


def generated_subgroup(G: FiniteGroup, gens) -> Subgroup:
    """Smallest subgroup containing ``gens`` (breadth-first closure)."""
    gens = tuple(dict.fromkeys(int(g) for g in gens))
    for g in gens:
        if not 0 <= g < G.order:
            raise ValueError(f"generator id {g} out of range")
    table = G.table
    seen = bytearray(G.order)
    seen[0] = 1
    queue = [0]
    qi = 0
    while qi < len(queue):
        a = queue[qi]
        qi += 1
        row = table[a]
        for g in gens:
            b = row[g]
            if not seen[b]:
                seen[b] = 1
                queue.append(b)
    return Subgroup(G, tuple(sorted(queue)), gens=gens)


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,), gens=())


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)), gens=tuple(range(G.order)))


def coset_partition(G: FiniteGroup, elements: tuple[int, ...], side: str):
    """Partition of G into cosets of a subgroup given by its element tuple.

    Returns ``(coset_id, cosets)`` where ``coset_id[g]`` is the index of
    the coset containing g and ``cosets[k]`` is a sorted element tuple.
    Coset indices are ordered by minimal element, so index 0 is the
    subgroup itself.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    n = G.order
    table = G.table
    cid = [-1] * n
    cosets = []
    for a in range(n):
        if cid[a] >= 0:
            continue
        if side == "right":
            elems = sorted(table[h][a] for h in elements)
        else:
            elems = sorted(table[a][h] for h in elements)
        k = len(cosets)
        for e in elems:
            cid[e] = k
        cosets.append(tuple(elems))
    return cid, cosets


def cosets(G: FiniteGroup, H: Subgroup, side: str) -> list[Coset]:
    """All (left|right) cosets of H, sorted by minimal representative."""
    _, parts = coset_partition(G, H.elements, side)
    return [Coset(H, part[0], side, part) for part in parts]


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    table = G.table
    inv = G.inverse
    eset = set(H.elements)
    for g in range(G.order):
        gi = inv[g]
        row = table[gi]
        for h in H.elements:
            if table[row[h]][g] not in eset:
                return False
    return True


def conjugate_subgroup(G: FiniteGroup, H: Subgroup, x: int) -> Subgroup:
    """H^x = x^-1 H x."""
    table = G.table
    xi = G.inverse[x]
    elems = tuple(sorted(table[table[xi][h]][x] for h in H.elements))
    gens = tuple(table[table[xi][g]][x] for g in H.gens)
    return Subgroup(G, elems, gens=gens)


def all_subgroups(G: FiniteGroup, *, order_bound: int | None = None) -> list[Subgroup]:
    """Every subgroup of G, sorted by (order, element tuple).

    Seeds with all cyclic subgroups, then repeatedly closes known
    subgroups extended by one coset representative until no new subgroup
    appears.  Results are cached on the group.
    """
    bound = resolve_order_bound(order_bound)
    if G.order > bound:
        raise OrderBoundExceeded(
            f"subgroup enumeration limited to order {bound}, group has {G.order}"
        )
    if G._subgroups is not None:
        return list(G._subgroups)
    known: dict[tuple[int, ...], Subgroup] = {}
    work: list[Subgroup] = []
    triv = trivial_subgroup(G)
    known[triv.elements] = triv
    for g in range(1, G.order):
        H = generated_subgroup(G, (g,))
        if H.elements not in known:
            known[H.elements] = H
            work.append(H)
    while work:
        H = work.pop()
        if H.order == G.order:
            continue
        # Extending by any element of a coset yields the same closure, so
        # one representative per nontrivial coset suffices.
        _, parts = coset_partition(G, H.elements, "right")
        for part in parts:
            g = part[0]
            if g == 0:
                continue
            K = generated_subgroup(G, H.gens + (g,))
            if K.elements not in known:
                known[K.elements] = K
                work.append(K)
    subs = sorted(known.values(), key=lambda s: (s.order, s.elements))
    G._subgroups = subs
    return list(subs)


def has_complement(G: FiniteGroup, H: Subgroup,
                   *, order_bound: int | None = None) -> Subgroup | None:
    """Some K <= G with H*K = G and H & K = {e}, or None.

    Scans all subgroups of order [G:H]; trivial intersection then forces
    |HK| = |H||K| = |G|.
    """
    target = G.order // H.order
    hset = set(H.elements)
    for K in all_subgroups(G, order_bound=order_bound):
        if K.order != target:
            continue
        if all(k == 0 or k not in hset for k in K.elements):
            return K
    return None


def torsion_components_abelian(G: FiniteGroup) -> tuple[Subgroup, Subgroup]:
    """(elements of 2-power order, elements of odd order) for abelian G."""
    if not G.is_abelian():
        raise NotAbelian("torsion decomposition requires an abelian group")
    orders = element_orders(G)
    two_part = []
    odd_part = []
    for g in range(G.order):
        k = orders[g]
        if k & (k - 1) == 0:
            two_part.append(g)
        if k % 2 == 1:
            odd_part.append(g)
    return (
        Subgroup(G, tuple(two_part), gens=tuple(two_part)),
        Subgroup(G, tuple(odd_part), gens=tuple(odd_part)),
    )


def subgroup_as_group(H: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Materialize H as a standalone group.

    Returns ``(K, carrier)`` where ``carrier[new_id]`` is the parent
    element id; element 0 of K corresponds to the parent identity.
    """
    G = H.group
    carrier = H.elements  # sorted, identity first
    pos = {old: new for new, old in enumerate(carrier)}
    table = [[pos[G.table[a][b]] for b in carrier] for a in carrier]
    labels = [G.labels[a] for a in carrier]
    K = FiniteGroup(table, labels, family="subgroup", family_params=(),
                    abelian=True if G.is_abelian() else None, validate=False)
    return K, carrier
