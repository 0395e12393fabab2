"""Finite groups as explicit multiplication tables.

Elements of a group of order n are the integers 0..n-1 ("element ids");
id 0 is always the identity.  Groups are built from a :class:`GroupSpec`
describing one of the supported families.  Canonical element orderings:

* ``Cyclic(n)``: residues 0..n-1.
* ``Dihedral(2m)``: rotations r^0..r^(m-1), then reflections r^i*s at m+i.
* ``GeneralizedQuaternion(4n)``: x^0..x^(2n-1), then x^i*y at 2n+i.
* ``Abelian(d1,..,dk)`` / ``Product``: component tuples in lexicographic
  order (last component least significant).
* ``Permutation``: breadth-first closure order from the identity.

Subsets of a group are passed around as sorted tuples of element ids.

Every constructed group is validated: identity at 0, Latin-square rows and
columns, two-sided inverses, and associativity (exhaustively for order
<= 256, by 10^5 sampled triples above unless ``strict`` forces the full
cubic check).  A :class:`FiniteGroup` is immutable after construction and
safe for concurrent reads.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .errors import BadTableFile, InvalidSpec, OrderBoundExceeded

PERMUTATION_ORDER_BOUND = 10240
EXHAUSTIVE_ASSOC_LIMIT = 256
SAMPLED_ASSOC_TRIPLES = 100_000


# ---------------------------------------------------------------------------
# Group specifications


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    order: int


@dataclass(frozen=True)
class GeneralizedQuaternion:
    order: int  # 4n with n >= 2


@dataclass(frozen=True)
class Abelian:
    factors: tuple[int, ...]

    def __init__(self, factors):
        object.__setattr__(self, "factors", tuple(int(f) for f in factors))


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"


@dataclass(frozen=True)
class Permutation:
    generators: tuple[tuple[tuple[int, ...], ...], ...]  # cycles per generator
    degree: int

    def __init__(self, generators, degree):
        gens = tuple(tuple(tuple(int(v) for v in cyc) for cyc in gen) for gen in generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "degree", int(degree))


@dataclass(frozen=True)
class Table:
    path: str


GroupSpec = Cyclic | Dihedral | GeneralizedQuaternion | Abelian | Product | Permutation | Table


# ---------------------------------------------------------------------------
# Core group object


class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[a][b]`` is the id of the product a*b, ``inverse[a]`` the id of
    a^-1 and ``labels[a]`` a display string.  ``family``/``family_params``
    record which constructor produced the group (e.g. ``("quaternion", 6)``),
    which downstream code may use to pick specialized methods.
    """

    __slots__ = (
        "order",
        "table",
        "inverse",
        "labels",
        "family",
        "family_params",
        "perm_images",
        "_abelian",
        "_orders",
        "_subgroups",
        "_torsion",
    )

    def __init__(
        self,
        table,
        labels=None,
        *,
        family: str = "table",
        family_params: tuple = (),
        abelian: bool | None = None,
        perm_images=None,
        validate: bool = True,
        strict: bool = False,
    ):
        self.table = [list(map(int, row)) for row in table]
        self.order = len(self.table)
        if self.order < 1:
            raise BadTableFile("a group table must have at least one row")
        if labels is None:
            labels = [str(i) for i in range(self.order)]
        self.labels = [str(x) for x in labels]
        if len(self.labels) != self.order:
            raise BadTableFile(
                f"got {len(self.labels)} labels for a table of order {self.order}"
            )
        self.family = family
        self.family_params = tuple(family_params)
        self.perm_images = perm_images
        self._abelian = abelian
        self._orders = None
        self._subgroups = None
        self._torsion = None
        if validate:
            _check_table(self.table, strict=strict)
        self.inverse = _inverse_table(self.table)

    # -- basic queries ------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        if self._abelian is None:
            t = self.table
            self._abelian = all(
                t[a][b] == t[b][a] for a in range(self.order) for b in range(a)
            )
        return self._abelian

    def label(self, a: int) -> str:
        return self.labels[a]

    def __repr__(self):
        params = ",".join(map(str, self.family_params))
        return f"FiniteGroup({self.family}({params}), order={self.order})"


# ---------------------------------------------------------------------------
# Validation


def _check_table(table, *, strict: bool) -> None:
    n = len(table)
    canon = list(range(n))
    for a, row in enumerate(table):
        if len(row) != n:
            raise BadTableFile(f"row {a} has {len(row)} entries, expected {n}")
        for b, v in enumerate(row):
            if not 0 <= v < n:
                raise BadTableFile(f"entry {v} at row {a}, column {b} out of range")
    if table[0] != canon:
        b = next(j for j in range(n) if table[0][j] != j)
        raise BadTableFile(f"identity violated at row 0, column {b}")
    for a in range(n):
        if table[a][0] != a:
            raise BadTableFile(f"identity violated at row {a}, column 0")
    for a, row in enumerate(table):
        if sorted(row) != canon:
            seen = set()
            for b, v in enumerate(row):
                if v in seen:
                    raise BadTableFile(f"row {a} repeats entry {v} at column {b}")
                seen.add(v)
    for b in range(n):
        seen = set()
        for a in range(n):
            v = table[a][b]
            if v in seen:
                raise BadTableFile(f"column {b} repeats entry {v} at row {a}")
            seen.add(v)
    _check_associativity(table, strict=strict)


def _check_associativity(table, *, strict: bool) -> None:
    n = len(table)
    if n <= EXHAUSTIVE_ASSOC_LIMIT or strict:
        if n <= 256:
            # rows fit in bytes; rb.translate(ra)[c] == table[a][table[b][c]]
            rows = [bytes(row) for row in table]
            pad = bytes(256 - n)
            for a in range(n):
                ra = rows[a] + pad
                ta = table[a]
                for b in range(n):
                    if rows[ta[b]] != rows[b].translate(ra):
                        c = next(
                            c
                            for c in range(n)
                            if table[ta[b]][c] != table[a][table[b][c]]
                        )
                        raise BadTableFile(
                            f"associativity fails at ({a},{b},{c}): "
                            f"({a}*{b})*{c} != {a}*({b}*{c})"
                        )
            return
        for a in range(n):
            ta = table[a]
            for b in range(n):
                tab = table[ta[b]]
                tb = table[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise BadTableFile(
                            f"associativity fails at ({a},{b},{c})"
                        )
        return
    rng = random.Random(0xA550C ^ n)
    for _ in range(SAMPLED_ASSOC_TRIPLES):
        a = rng.randrange(n)
        b = rng.randrange(n)
        c = rng.randrange(n)
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise BadTableFile(f"associativity fails at ({a},{b},{c})")


def _inverse_table(table) -> list[int]:
    n = len(table)
    inv = [0] * n
    for a in range(n):
        try:
            b = table[a].index(0)
        except ValueError:
            raise BadTableFile(f"row {a} has no right inverse") from None
        if table[b][a] != 0:
            raise BadTableFile(f"element {a}: right inverse {b} is not a left inverse")
        inv[a] = b
    return inv


# ---------------------------------------------------------------------------
# Family constructors


def _pow_label(i: int, with_y: bool = False) -> str:
    if not with_y:
        return "e" if i == 0 else "x" if i == 1 else f"x^{i}"
    return "y" if i == 0 else "x*y" if i == 1 else f"x^{i}*y"


def _build_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidSpec(f"cyclic order must be >= 1, got {n}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, [str(i) for i in range(n)],
                       family="cyclic", family_params=(n,), abelian=True)


def _build_dihedral(order: int) -> FiniteGroup:
    if order < 2 or order % 2:
        raise InvalidSpec(f"dihedral order must be even and >= 2, got {order}")
    m = order // 2
    table = [[0] * order for _ in range(order)]
    for i in range(m):
        for j in range(m):
            table[i][j] = (i + j) % m
            table[i][m + j] = m + (i + j) % m
            table[m + i][j] = m + (i - j) % m
            table[m + i][m + j] = (i - j) % m
    labels = ["e" if i == 0 else "r" if i == 1 else f"r^{i}" for i in range(m)]
    labels += ["s" if i == 0 else "r*s" if i == 1 else f"r^{i}*s" for i in range(m)]
    return FiniteGroup(table, labels, family="dihedral", family_params=(order,),
                       abelian=m <= 2)


def _build_quaternion(order: int) -> FiniteGroup:
    if order % 4 or order < 8:
        raise InvalidSpec(
            f"generalized quaternion order must be 4n with n >= 2, got {order}"
        )
    n = order // 4
    big = 2 * n  # the order of x; y^2 = x^n and y^-1 x y = x^-1
    table = [[0] * order for _ in range(order)]
    for i in range(big):
        for j in range(big):
            table[i][j] = (i + j) % big
            table[i][big + j] = big + (i + j) % big
            table[big + i][j] = big + (i - j) % big
            table[big + i][big + j] = (i - j + n) % big
    labels = [_pow_label(i) for i in range(big)]
    labels += [_pow_label(i, with_y=True) for i in range(big)]
    return FiniteGroup(table, labels, family="quaternion", family_params=(n,),
                       abelian=False)


def _build_abelian(factors: tuple[int, ...]) -> FiniteGroup:
    if not factors:
        raise InvalidSpec("abelian spec needs at least one factor")
    if any(f < 2 for f in factors):
        raise InvalidSpec(f"abelian factors must be >= 2, got {factors}")
    order = 1
    for f in factors:
        order *= f
    k = len(factors)

    def decode(idx: int) -> list[int]:
        out = [0] * k
        for pos in range(k - 1, -1, -1):
            idx, out[pos] = divmod(idx, factors[pos])
        return out

    tuples = [decode(i) for i in range(order)]
    table = [[0] * order for _ in range(order)]
    for a, ta in enumerate(tuples):
        for b, tb in enumerate(tuples):
            idx = 0
            for pos in range(k):
                idx = idx * factors[pos] + (ta[pos] + tb[pos]) % factors[pos]
            table[a][b] = idx
    if k == 1:
        labels = [str(t[0]) for t in tuples]
    else:
        labels = ["(" + ",".join(map(str, t)) + ")" for t in tuples]
    return FiniteGroup(table, labels, family="abelian",
                       family_params=tuple(factors), abelian=True)


def _build_product(left: FiniteGroup, right: FiniteGroup) -> FiniteGroup:
    nl, nr = left.order, right.order
    order = nl * nr
    table = [[0] * order for _ in range(order)]
    lt, rt = left.table, right.table
    for a1 in range(nl):
        for b1 in range(nr):
            row = table[a1 * nr + b1]
            lrow, rrow = lt[a1], rt[b1]
            for a2 in range(nl):
                base = lrow[a2] * nr
                for b2 in range(nr):
                    row[a2 * nr + b2] = base + rrow[b2]
    labels = [
        f"({left.labels[a]},{right.labels[b]})"
        for a in range(nl)
        for b in range(nr)
    ]
    return FiniteGroup(table, labels, family="product",
                       family_params=(left.family_params, right.family_params),
                       abelian=left.is_abelian() and right.is_abelian())


def perm_from_cycles(cycles, degree: int) -> tuple[int, ...]:
    """Image tuple of a product of cycles (rightmost cycle applied first)."""
    img = list(range(degree))
    for cyc in reversed(cycles):
        if len(set(cyc)) != len(cyc):
            raise InvalidSpec(f"cycle {cyc} repeats an entry")
        for v in cyc:
            if not 0 <= v < degree:
                raise InvalidSpec(f"cycle entry {v} out of range for degree {degree}")
        mapping = {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}
        img = [mapping.get(v, v) for v in img]
    return tuple(img)


def cycle_notation(img: tuple[int, ...]) -> str:
    seen = [False] * len(img)
    parts = []
    for start in range(len(img)):
        if seen[start] or img[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        v = img[start]
        while v != start:
            cyc.append(v)
            seen[v] = True
            v = img[v]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "e"


def _build_permutation(spec: Permutation, order_bound: int) -> FiniteGroup:
    if spec.degree < 1:
        raise InvalidSpec(f"permutation degree must be >= 1, got {spec.degree}")
    if not spec.generators:
        raise InvalidSpec("permutation spec needs at least one generator")
    gens = [perm_from_cycles(g, spec.degree) for g in spec.generators]
    identity = tuple(range(spec.degree))
    index = {identity: 0}
    elems = [identity]
    qi = 0
    while qi < len(elems):
        cur = elems[qi]
        qi += 1
        for g in gens:
            nxt = tuple(cur[g[i]] for i in range(spec.degree))
            if nxt not in index:
                if len(elems) >= order_bound:
                    raise OrderBoundExceeded(
                        f"permutation closure exceeds bound {order_bound}"
                    )
                index[nxt] = len(elems)
                elems.append(nxt)
    n = len(elems)
    table = [[0] * n for _ in range(n)]
    for a, pa in enumerate(elems):
        for b, pb in enumerate(elems):
            table[a][b] = index[tuple(pa[pb[i]] for i in range(spec.degree))]
    labels = [cycle_notation(p) for p in elems]
    return FiniteGroup(table, labels, family="permutation",
                       family_params=(spec.degree, len(gens)),
                       perm_images=tuple(elems))


def load_table_group(path: str, *, strict: bool = False) -> FiniteGroup:
    """Load a group from a JSON table file.

    Expected shape: ``{"order": n, "labels": [...], "table": [[...], ...]}``
    with row-major integer entries and the identity at index 0.  ``labels``
    is optional.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise BadTableFile(f"cannot read table file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise BadTableFile(f"table file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise BadTableFile("table file must contain a JSON object")
    table = data.get("table")
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise BadTableFile("'table' must be a list of rows")
    order = data.get("order", len(table))
    if order != len(table):
        raise BadTableFile(f"declared order {order} but table has {len(table)} rows")
    for a, row in enumerate(table):
        for b, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise BadTableFile(f"non-integer entry at row {a}, column {b}")
    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != len(table):
            raise BadTableFile("'labels' must list one string per element")
    return FiniteGroup(table, labels, family="table", family_params=(path,),
                       strict=strict)


def build_group(
    spec: GroupSpec,
    *,
    strict: bool = False,
    permutation_order_bound: int = PERMUTATION_ORDER_BOUND,
) -> FiniteGroup:
    """Construct and validate the group described by ``spec``."""
    if isinstance(spec, Cyclic):
        return _build_cyclic(spec.n)
    if isinstance(spec, Dihedral):
        return _build_dihedral(spec.order)
    if isinstance(spec, GeneralizedQuaternion):
        return _build_quaternion(spec.order)
    if isinstance(spec, Abelian):
        return _build_abelian(spec.factors)
    if isinstance(spec, Product):
        left = build_group(spec.left, strict=strict,
                           permutation_order_bound=permutation_order_bound)
        right = build_group(spec.right, strict=strict,
                            permutation_order_bound=permutation_order_bound)
        return _build_product(left, right)
    if isinstance(spec, Permutation):
        return _build_permutation(spec, permutation_order_bound)
    if isinstance(spec, Table):
        return load_table_group(spec.path, strict=strict)
    raise InvalidSpec(f"unknown group spec {spec!r}")


# ---------------------------------------------------------------------------
# Element queries


def element_order(G: FiniteGroup, g: int) -> int:
    """Smallest k >= 1 with g^k = e; always divides the group order."""
    if not 0 <= g < G.order:
        raise ValueError(f"element id {g} out of range")
    table = G.table
    k = 1
    cur = g
    while cur != 0:
        cur = table[cur][g]
        k += 1
    return k


def element_orders(G: FiniteGroup) -> tuple[int, ...]:
    """Orders of all elements, cached on the group."""
    if G._orders is None:
        G._orders = tuple(element_order(G, g) for g in range(G.order))
    return G._orders


def squares(G: FiniteGroup) -> tuple[int, ...]:
    """The set {g^2 : g in G} as a sorted tuple; always contains e."""
    return tuple(sorted({G.table[g][g] for g in range(G.order)}))


def has_element_of_order_4(G: FiniteGroup) -> bool:
    table = G.table
    for g in range(G.order):
        g2 = table[g][g]
        if g2 != 0 and table[g2][g2] == 0:
            return True
    return False


def power(G: FiniteGroup, g: int, k: int) -> int:
    """g^k for any integer k (negative exponents use the inverse)."""
    if k < 0:
        g, k = G.inverse[g], -k
    acc = 0
    base = g
    while k:
        if k & 1:
            acc = G.table[acc][base]
        base = G.table[base][base]
        k >>= 1
    return acc
