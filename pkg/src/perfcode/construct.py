"""Constructive inverse-closed transversals and the brute-force oracle.

A subgroup H is a perfect code of some Cayley graph of G exactly when H
has a (left or right) transversal that contains e and is inverse-closed;
the connection set is then the transversal minus e.  This module holds:

* :func:`involution_transversal` — the inductive construction for
  H = <x> with x a non-square involution, processing one, two or four
  cosets per step depending on the orders of y and xy;
* :func:`order4free_transversal` — the construction for arbitrary H in a
  group with no elements of order 4: cosets holding an involution take
  that involution as representative, the involution-free cosets are
  partitioned into paired orbits of the right H-action and receive
  mutually inverse representatives;
* :func:`search_transversal` — a complete backtracking search over right
  coset representatives, used as the independent oracle against the
  constructions and the closed-form classifications;
* :func:`coset_obstruction` — finds a coset that is inverse-closed and
  involution-free, which rules out any inverse-closed transversal.

All scans run in ascending element-id order so certificates are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cayley import ConnectionSet, Transversal, connection_set, is_transversal
from .errors import (
    HasOrder4Element,
    IsSquare,
    MissingIdentity,
    NotInverseClosed,
    NotInvolution,
    SearchBudgetExceeded,
)
from .groups import FiniteGroup, has_element_of_order_4, squares
from .subgroups import Coset, Subgroup, coset_partition, generated_subgroup

DEFAULT_NODE_BUDGET = 100_000_000


class CosetClass(Enum):
    TRIVIAL = "trivial"  # the subgroup itself
    LAMBDA1 = "has-involution"
    LAMBDA2 = "involution-free"


@dataclass(frozen=True)
class CosetClassification:
    coset: Coset
    kind: CosetClass
    involution: int | None  # minimal involution for LAMBDA1 cosets


@dataclass(frozen=True)
class OrbitPairing:
    """A paired pair of orbits of the right H-action on involution-free cosets.

    The j-th coset of ``orbit_plus`` is H*base*h_multipliers[j] and the
    j-th coset of ``orbit_minus`` is H*base^-1*g_multipliers[j]; the
    assigned representatives g_j^-1*base*h_j and h_j^-1*base^-1*g_j are
    inverses of each other.
    """

    base: int
    orbit_plus: tuple[Coset, ...]
    orbit_minus: tuple[Coset, ...]
    h_multipliers: tuple[int, ...]
    g_multipliers: tuple[int, ...]


class SearchOutcome(Enum):
    WITNESS = "witness"
    EXHAUSTED = "exhausted"
    OBSTRUCTION = "obstruction"


@dataclass(frozen=True)
class SearchResult:
    outcome: SearchOutcome
    transversal: Transversal | None
    obstruction: Coset | None
    nodes_explored: int

    @property
    def is_witness(self) -> bool:
        return self.outcome is SearchOutcome.WITNESS


def classify_cosets(G: FiniteGroup, H: Subgroup) -> list[CosetClassification]:
    """Right cosets of H tagged by whether they contain an involution."""
    table = G.table
    _, parts = coset_partition(G, H.elements, "right")
    out = []
    for part in parts:
        if part[0] == 0:
            out.append(CosetClassification(Coset(H, 0, "right", part),
                                           CosetClass.TRIVIAL, None))
            continue
        invol = next((t for t in part if table[t][t] == 0), None)
        kind = CosetClass.LAMBDA2 if invol is None else CosetClass.LAMBDA1
        out.append(CosetClassification(Coset(H, part[0], "right", part), kind, invol))
    return out


def involution_transversal(G: FiniteGroup, x: int) -> Transversal:
    """Inverse-closed right transversal of <x> containing e.

    Requires x to be an involution that is not a square of G; when x is a
    square the coset {y, y^-1} of any y with y^2 = x is inverse-closed and
    involution-free, so no such transversal exists.

    Unprocessed elements y are scanned in ascending id order.  If y is an
    involution it represents its own coset; otherwise if x*y is an
    involution it represents the coset; otherwise two (commuting case) or
    four (non-commuting case) cosets are processed at once with mutually
    inverse representatives.
    """
    table = G.table
    if x == 0 or table[x][x] != 0:
        raise NotInvolution(f"element {x} ({G.labels[x]}) does not have order 2")
    if x in squares(G):
        raise IsSquare(
            f"involution {x} ({G.labels[x]}) is a square; no inverse-closed "
            "transversal of <x> exists"
        )
    H = generated_subgroup(G, (x,))
    inv = G.inverse
    reps = [0]
    covered = bytearray(G.order)
    covered[0] = 1
    covered[x] = 1
    remaining = G.order - 2

    def take(rep: int, members) -> None:
        nonlocal remaining
        reps.append(rep)
        for m in members:
            assert not covered[m], "coset processed twice"
            covered[m] = 1
            remaining -= 1

    for y in range(1, G.order):
        if covered[y]:
            continue
        xy = table[x][y]
        if table[y][y] == 0:
            take(y, (y, xy))
            continue
        if table[xy][xy] == 0:
            take(xy, (y, xy))
            continue
        yi = inv[y]
        if xy == table[y][x]:
            # x and y commute: Hy and Hy^-1 are distinct cosets.
            take(y, (y, xy))
            take(yi, (yi, table[x][yi]))
        else:
            # Four pairwise distinct cosets whose union is inverse-closed:
            # Hy, H(xy)^-1, H(xy^-1 x)^-1 and H(yx)^-1.
            a = table[table[x][yi]][x]  # x y^-1 x
            b = table[table[x][y]][x]  # x y x
            take(y, (y, xy))
            take(a, (table[yi][x], a))
            take(b, (b, table[y][x]))
            take(yi, (table[x][yi], yi))
    assert remaining == 0
    T = Transversal(H, "right", tuple(sorted(reps)))
    assert T.is_inverse_closed() and is_transversal(G, H, T.reps, "right")
    return T


def lambda2_orbit_pairings(G: FiniteGroup, H: Subgroup) -> list[OrbitPairing]:
    """Partition of the involution-free cosets into paired H-orbits.

    Bases are chosen as the minimal unassigned coset representative; orbit
    members are enumerated by ascending multiplier.  For every pairing the
    two orbits are disjoint and equally sized, which the construction
    checks outright.
    """
    table = G.table
    inv = G.inverse
    cid, _ = coset_partition(G, H.elements, "right")
    classes = classify_cosets(G, H)
    lam2 = {c.coset.representative: c.coset for c in classes
            if c.kind is CosetClass.LAMBDA2}
    by_id = {cid[c.representative]: c for c in lam2.values()}
    unassigned = set(by_id)
    pairings = []
    while unassigned:
        base_cid = min(unassigned, key=lambda k: by_id[k].representative)
        x = by_id[base_cid].representative
        xi = inv[x]
        assert cid[xi] != cid[x], "involution-free coset equals its inverse coset"
        plus: list[tuple[int, int]] = []
        minus: list[tuple[int, int]] = []
        seen_p: set[int] = set()
        seen_m: set[int] = set()
        for h in H.elements:
            cp = cid[table[x][h]]
            if cp not in seen_p:
                seen_p.add(cp)
                plus.append((cp, h))
            cm = cid[table[xi][h]]
            if cm not in seen_m:
                seen_m.add(cm)
                minus.append((cm, h))
        assert len(plus) == len(minus), "paired orbits differ in size"
        assert not (seen_p & seen_m), "paired orbits intersect"
        assert seen_p <= unassigned and seen_m <= unassigned
        unassigned -= seen_p | seen_m
        pairings.append(OrbitPairing(
            base=x,
            orbit_plus=tuple(by_id[k] for k, _ in plus),
            orbit_minus=tuple(by_id[k] for k, _ in minus),
            h_multipliers=tuple(h for _, h in plus),
            g_multipliers=tuple(g for _, g in minus),
        ))
    return pairings


def order4free_transversal(G: FiniteGroup, H: Subgroup) -> Transversal:
    """Inverse-closed right transversal of H containing e.

    Requires G to have no elements of order 4.  The subgroup coset takes
    e; every coset holding an involution takes its minimal involution;
    the involution-free cosets are covered orbit-pair by orbit-pair with
    representatives g_j^-1*x_i*h_j and their inverses h_j^-1*x_i^-1*g_j.
    """
    if has_element_of_order_4(G):
        raise HasOrder4Element("group has an element of order 4")
    table = G.table
    inv = G.inverse
    reps = [0]
    for c in classify_cosets(G, H):
        if c.kind is CosetClass.LAMBDA1:
            reps.append(c.involution)
    for pairing in lambda2_orbit_pairings(G, H):
        x = pairing.base
        xi = inv[x]
        for h, g in zip(pairing.h_multipliers, pairing.g_multipliers):
            reps.append(table[inv[g]][table[x][h]])
            reps.append(table[inv[h]][table[xi][g]])
    T = Transversal(H, "right", tuple(sorted(reps)))
    assert T.contains_identity() and T.is_inverse_closed()
    assert is_transversal(G, H, T.reps, "right")
    return T


def connection_set_from_transversal(T: Transversal) -> ConnectionSet:
    """S = T - {e}; Cay(G, S) then admits T's subgroup as a perfect code."""
    if not T.contains_identity():
        raise MissingIdentity("transversal does not contain the identity")
    if not T.is_inverse_closed():
        raise NotInverseClosed("transversal is not inverse-closed")
    return connection_set(T.subgroup.group, T.reps[1:])


def coset_obstruction(G: FiniteGroup, H: Subgroup) -> Coset | None:
    """A coset (either side) that is inverse-closed and involution-free.

    Any such coset can never be hit by an inverse-closed transversal: its
    unique representative would have to be its own inverse.  Right cosets
    are scanned before left ones, each side in ascending-representative
    order; absence proves nothing.
    """
    table = G.table
    inv = G.inverse
    for side in ("right", "left"):
        _, parts = coset_partition(G, H.elements, side)
        for part in parts:
            if part[0] == 0:
                continue
            pset = set(part)
            if all(inv[t] in pset for t in part) and all(
                table[t][t] != 0 for t in part
            ):
                return Coset(H, part[0], side, part)
    return None


def search_transversal(
    G: FiniteGroup,
    H: Subgroup,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> SearchResult:
    """Complete backtracking search for an inverse-closed right transversal.

    Processes the minimal-index unrepresented coset and tries candidate
    representatives in ascending id order; choosing t forces t^-1 as the
    representative of its own coset (pruning on conflict).  The subgroup
    coset is pinned to e.  Right transversals suffice: an inverse-closed
    right transversal containing e is also a left transversal.

    Exhaustion is a result, not an error; exceeding ``node_budget`` raises
    :class:`SearchBudgetExceeded`.
    """
    inv = G.inverse
    cid, parts = coset_partition(G, H.elements, "right")
    m = len(parts)
    reps = [-1] * m
    reps[0] = 0
    nodes = 0
    stack: list[tuple[int, int, int]] = []  # (coset, next candidate pos, partner)
    i = 1 if m > 1 else -1
    pos = 0
    while True:
        if i < 0:
            T = Transversal(H, "right", tuple(sorted(reps)))
            assert T.is_inverse_closed() and T.contains_identity()
            return SearchResult(SearchOutcome.WITNESS, T, None, nodes)
        part = parts[i]
        placed = False
        while pos < len(part):
            t = part[pos]
            pos += 1
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceeded(
                    f"transversal search exceeded {node_budget} nodes"
                )
            ti = inv[t]
            j = cid[ti]
            if j == i:
                if ti != t:
                    continue
                reps[i] = t
                stack.append((i, pos, -1))
                placed = True
                break
            if reps[j] == -1:
                reps[i] = t
                reps[j] = ti
                stack.append((i, pos, j))
                placed = True
                break
            if reps[j] == ti:
                reps[i] = t
                stack.append((i, pos, -1))
                placed = True
                break
        if placed:
            i = next((k for k in range(i + 1, m) if reps[k] == -1), -1)
            pos = 0
            continue
        if not stack:
            return SearchResult(SearchOutcome.EXHAUSTED, None, None, nodes)
        i, pos, j = stack.pop()
        reps[i] = -1
        if j >= 0:
            reps[j] = -1
