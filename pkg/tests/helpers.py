"""Shared test utilities: independent oracles kept deliberately naive."""

from __future__ import annotations

from collections import deque

from perfcode import FiniteGroup, element_order


def naive_adjacency(G: FiniteGroup, S) -> list[set[int]]:
    """Adjacency sets straight from the definition: x ~ y iff y*x^-1 in S."""
    sset = set(S)
    adj = [set() for _ in range(G.order)]
    for x in range(G.order):
        for y in range(G.order):
            if x != y and G.table[y][G.inverse[x]] in sset:
                adj[x].add(y)
    return adj


def naive_perfect_code(G: FiniteGroup, S, C) -> bool:
    adj = naive_adjacency(G, S)
    cset = set(C)
    for v in range(G.order):
        inside = len(adj[v] & cset)
        if v in cset:
            if inside:
                return False
        elif inside != 1:
            return False
    return True


def inverse_closed(G: FiniteGroup, T) -> bool:
    tset = set(T)
    return all(G.inverse[t] in tset for t in tset)


def connected_components(n: int, neighbors) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            v = queue.popleft()
            comp.append(v)
            for u in neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def order_profile(G: FiniteGroup) -> dict[int, int]:
    prof: dict[int, int] = {}
    for g in range(G.order):
        k = element_order(G, g)
        prof[k] = prof.get(k, 0) + 1
    return prof


def brute_force_isomorphic(G1: FiniteGroup, G2: FiniteGroup) -> bool:
    """Backtracking isomorphism search, pruned by element orders.

    Only suitable for small groups; used to pin down a construction up to
    isomorphism without trusting the code under test.
    """
    if G1.order != G2.order:
        return False
    if order_profile(G1) != order_profile(G2):
        return False
    n = G1.order
    orders1 = [element_order(G1, g) for g in range(n)]
    orders2 = [element_order(G2, g) for g in range(n)]
    candidates = [
        [h for h in range(n) if orders2[h] == orders1[g]] for g in range(n)
    ]
    phi = [-1] * n
    used = [False] * n
    phi[0] = 0
    used[0] = True

    def extend(g: int) -> bool:
        if g == n:
            return True
        if phi[g] != -1:
            return extend(g + 1)
        for h in candidates[g]:
            if used[h]:
                continue
            # tentatively map g -> h, then force products with mapped elements
            forced: list[int] = []
            phi[g] = h
            used[h] = True
            ok = True
            for a in range(n):
                if phi[a] == -1 or not ok:
                    continue
                for x, y in ((a, g), (g, a)):
                    p = G1.table[x][y]
                    q = G2.table[phi[x]][phi[y]]
                    if phi[p] == -1:
                        if used[q] or orders1[p] != orders2[q]:
                            ok = False
                            break
                        phi[p] = q
                        used[q] = True
                        forced.append(p)
                    elif phi[p] != q:
                        ok = False
                        break
            if ok and extend(g + 1):
                return True
            for p in forced:
                used[phi[p]] = False
                phi[p] = -1
            used[h] = False
            phi[g] = -1
        return False

    return extend(1)
