"""The built-in test catalogue of small groups.

Covers, up to a configurable order cap, all cyclic groups, all dihedral
and generalized quaternion groups, every non-cyclic abelian group via its
invariant-factor chain, permutation-generated S3, A4 and S4, and a few
direct products that exercise the non-abelian constructive, complement
and brute-force paths.  Entries are named by their DSL text.
"""

from __future__ import annotations

from .groups import (
    Abelian,
    Cyclic,
    Dihedral,
    FiniteGroup,
    GeneralizedQuaternion,
    Product,
    build_group,
)
from .specparse import parse_spec

_EXTRA_PRODUCTS = (
    "D(6) x Z(3)",
    "A(2,2) x Z(5)",
    "Z(3) x Q(8)",
    "D(8) x Z(2)",
)

_PERM_GROUPS = (
    ("perm{(0 1 2);(0 1)}@3", 6),  # S3
    ("perm{(0 1 2);(1 2 3)}@4", 12),  # A4
    ("perm{(0 1 2 3);(0 1)}@4", 24),  # S4
)

_GROUP_CACHE: dict[str, FiniteGroup] = {}


def _abelian_chains(max_order: int) -> list[tuple[int, ...]]:
    """Invariant-factor chains d1 | d2 | ... | dk with k >= 2, product <= cap."""
    chains: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], prod: int) -> None:
        if len(prefix) >= 2:
            chains.append(prefix)
        last = prefix[-1]
        nxt = last
        while prod * nxt <= max_order:
            extend(prefix + (nxt,), prod * nxt)
            nxt += last

    for d1 in range(2, max_order + 1):
        if d1 * d1 <= max_order:
            extend((d1,), d1)
    chains.sort(key=lambda c: (_prod(c), c))
    return chains


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


def catalogue_names(max_order: int = 64) -> list[str]:
    names = [f"Z({n})" for n in range(1, max_order + 1)]
    names += [f"D({n})" for n in range(4, max_order + 1, 2)]
    names += [f"Q({n})" for n in range(8, max_order + 1, 4)]
    names += ["A(" + ",".join(map(str, chain)) + ")"
              for chain in _abelian_chains(max_order)]
    names += [name for name, order in _PERM_GROUPS if order <= max_order]
    for text in _EXTRA_PRODUCTS:
        spec = parse_spec(text)
        if _spec_order(spec) <= max_order:
            names.append(text)
    return names


def _spec_order(spec) -> int:
    # cheap order computation without building tables
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, (Dihedral, GeneralizedQuaternion)):
        return spec.order
    if isinstance(spec, Abelian):
        return _prod(spec.factors)
    if isinstance(spec, Product):
        return _spec_order(spec.left) * _spec_order(spec.right)
    raise ValueError(f"order of {spec!r} not known without building")


def catalogue_groups(max_order: int = 64) -> list[tuple[str, FiniteGroup]]:
    """(name, group) pairs, built lazily and cached across calls."""
    out = []
    for name in catalogue_names(max_order):
        G = _GROUP_CACHE.get(name)
        if G is None:
            G = build_group(parse_spec(name))
            _GROUP_CACHE[name] = G
        out.append((name, G))
    return out
