import pytest

from perfcode import (
    Abelian,
    CosetClass,
    Cyclic,
    Dihedral,
    GeneralizedQuaternion,
    HasOrder4Element,
    IsSquare,
    MissingIdentity,
    NotInverseClosed,
    NotInvolution,
    Permutation,
    Product,
    SearchBudgetExceeded,
    SearchOutcome,
    Transversal,
    all_subgroups,
    build_group,
    classify_cosets,
    connection_set_from_transversal,
    coset_obstruction,
    element_order,
    generated_subgroup,
    group_ring_product_check,
    involution_transversal,
    is_transversal,
    lambda2_orbit_pairings,
    order4free_transversal,
    search_transversal,
    squares,
    subgroup_from_elements,
    trivial_subgroup,
)
from helpers import inverse_closed

Z4 = build_group(Cyclic(4))
Q8 = build_group(GeneralizedQuaternion(8))
D6 = build_group(Dihedral(6))
S4 = build_group(Permutation([((0, 1, 2, 3),), ((0, 1),)], 4))

ORDER4_FREE = [
    build_group(Cyclic(15)),
    build_group(Abelian([2, 2, 3])),
    D6,
    build_group(Product(Dihedral(6), Cyclic(3))),
    build_group(Permutation([((0, 1, 2),), ((1, 2, 3),)], 4)),  # A4
]


def check_certificate(G, H, T):
    assert isinstance(T, Transversal)
    assert T.side == "right"
    assert T.reps[0] == 0
    assert inverse_closed(G, T.reps)
    assert is_transversal(G, H, T.reps, "right")


def test_involution_transversal_z2xz3():
    G = build_group(Product(Cyclic(2), Cyclic(3)))
    T = involution_transversal(G, 3)  # the unique involution (1,0)
    assert T.reps == (0, 1, 2)  # exactly the order-3 subgroup {e,a,a^2}
    check_certificate(G, generated_subgroup(G, (3,)), T)


def test_involution_transversal_dihedral_reflection():
    for x in range(3, 6):  # the three reflections
        T = involution_transversal(D6, x)
        assert len(T.reps) == 3
        check_certificate(D6, generated_subgroup(D6, (x,)), T)


def test_involution_transversal_rejects_squares():
    with pytest.raises(IsSquare):
        involution_transversal(Z4, 2)  # 2 = 1 + 1
    with pytest.raises(IsSquare):
        involution_transversal(Q8, 2)  # x^2 = x * x


def test_involution_transversal_rejects_non_involutions():
    with pytest.raises(NotInvolution):
        involution_transversal(D6, 0)
    with pytest.raises(NotInvolution):
        involution_transversal(D6, 1)


def test_involution_transversal_all_catalogue_cases():
    # every non-square involution across varied groups gets a certificate;
    # S4 exercises the non-commuting four-coset step
    for G in ORDER4_FREE + [S4, build_group(Dihedral(16))]:
        sq = set(squares(G))
        for x in range(1, G.order):
            if G.table[x][x] != 0:
                continue
            if x in sq:
                continue
            T = involution_transversal(G, x)
            check_certificate(G, generated_subgroup(G, (x,)), T)


def test_classify_cosets():
    H = generated_subgroup(D6, (1,))  # rotations
    classes = classify_cosets(D6, H)
    assert classes[0].kind is CosetClass.TRIVIAL
    assert classes[1].kind is CosetClass.LAMBDA1
    assert classes[1].involution == 3  # minimal reflection

    Z9 = build_group(Cyclic(9))
    H = generated_subgroup(Z9, (3,))
    kinds = [c.kind for c in classify_cosets(Z9, H)]
    assert kinds == [CosetClass.TRIVIAL, CosetClass.LAMBDA2, CosetClass.LAMBDA2]


def test_lambda2_structure():
    # involution-free cosets: never equal to the inverse coset, stay
    # involution-free under the right action, and pair up into disjoint
    # equal-sized orbits
    for G in ORDER4_FREE:
        for H in all_subgroups(G):
            classes = classify_cosets(G, H)
            lam2 = [c for c in classes if c.kind is CosetClass.LAMBDA2]
            for c in lam2:
                x = c.coset.representative
                xinv_coset = sorted(G.table[h][G.inverse[x]] for h in H.elements)
                assert tuple(xinv_coset) != c.coset.elements
                for h in H.elements:
                    moved = sorted(G.table[e][h] for e in c.coset.elements)
                    assert all(G.table[t][t] != 0 for t in moved)
            pairings = lambda2_orbit_pairings(G, H)
            seen = set()
            for p in pairings:
                plus = {c.elements for c in p.orbit_plus}
                minus = {c.elements for c in p.orbit_minus}
                assert len(plus) == len(p.orbit_plus)
                assert len(minus) == len(p.orbit_minus)
                assert len(p.orbit_plus) == len(p.orbit_minus)
                assert not plus & minus
                assert not (plus | minus) & seen
                seen |= plus | minus
            assert len(seen) == len(lam2)


def test_order4free_transversal_examples():
    Z15 = build_group(Cyclic(15))
    H = generated_subgroup(Z15, (5,))
    T = order4free_transversal(Z15, H)
    assert len(T.reps) == 5
    check_certificate(Z15, H, T)

    G = ORDER4_FREE[3]  # D6 x Z3
    full = subgroup_from_elements(G, range(G.order))
    assert order4free_transversal(G, full).reps == (0,)
    for H in all_subgroups(G):
        if H.order == 2:
            T = order4free_transversal(G, H)
            assert len(T.reps) == 9
            check_certificate(G, H, T)


def test_order4free_transversal_all_subgroups():
    for G in ORDER4_FREE:
        for H in all_subgroups(G):
            check_certificate(G, H, order4free_transversal(G, H))


def test_order4free_requires_no_order_4():
    with pytest.raises(HasOrder4Element):
        order4free_transversal(Z4, subgroup_from_elements(Z4, [0, 2]))


def test_connection_set_from_transversal():
    G = build_group(Cyclic(15))
    full = subgroup_from_elements(G, range(15))
    T = order4free_transversal(G, full)
    assert connection_set_from_transversal(T).elements == ()

    H = generated_subgroup(G, (5,))
    S = connection_set_from_transversal(order4free_transversal(G, H))
    assert len(S.elements) == 4
    assert group_ring_product_check(G, S, H.elements).is_all_ones()

    with pytest.raises(MissingIdentity):
        connection_set_from_transversal(Transversal(H, "right", (1, 2, 6, 11, 12)))
    with pytest.raises(NotInverseClosed):
        connection_set_from_transversal(Transversal(H, "right", (0, 1, 2, 8, 11)))


def test_search_exhausts_on_z4():
    H = subgroup_from_elements(Z4, [0, 2])
    result = search_transversal(Z4, H)
    assert result.outcome is SearchOutcome.EXHAUSTED
    assert result.transversal is None
    assert result.nodes_explored > 0


def test_search_trivial_subgroup():
    for G in (Z4, D6, Q8):
        result = search_transversal(G, trivial_subgroup(G))
        assert result.is_witness
        assert result.transversal.reps == tuple(range(G.order))


def test_search_exhausts_on_q8_center():
    H = generated_subgroup(Q8, (2,))
    result = search_transversal(Q8, H)
    assert result.outcome is SearchOutcome.EXHAUSTED
    # the same verdict is forced because x^2 is a square involution
    with pytest.raises(IsSquare):
        involution_transversal(Q8, 2)


def test_search_finds_witnesses_on_order4free():
    for G in ORDER4_FREE:
        for H in all_subgroups(G):
            result = search_transversal(G, H)
            assert result.is_witness
            check_certificate(G, H, result.transversal)


def test_search_budget():
    G = build_group(Cyclic(45))
    H = generated_subgroup(G, (9,))
    with pytest.raises(SearchBudgetExceeded):
        search_transversal(G, H, node_budget=2)


def test_coset_obstruction_examples():
    H = subgroup_from_elements(Z4, [0, 2])
    obs = coset_obstruction(Z4, H)
    assert obs is not None
    assert obs.elements == (1, 3)

    Z6 = build_group(Cyclic(6))
    assert coset_obstruction(Z6, subgroup_from_elements(Z6, [0, 3])) is None

    obs = coset_obstruction(Q8, generated_subgroup(Q8, (2,)))
    assert obs.elements == (1, 3)  # {x, x^-1}, both of order 4


def test_obstruction_is_inverse_closed_and_involution_free():
    for G in (Z4, Q8, build_group(Cyclic(16)), build_group(Abelian([2, 4]))):
        for H in all_subgroups(G):
            obs = coset_obstruction(G, H)
            if obs is None:
                continue
            eset = set(obs.elements)
            assert 0 not in eset
            assert all(G.inverse[t] in eset for t in obs.elements)
            assert all(element_order(G, t) != 2 for t in obs.elements)


def test_obstruction_implies_exhaustion():
    for G in (Z4, Q8, build_group(Cyclic(8)), build_group(Abelian([2, 4])),
              build_group(GeneralizedQuaternion(12))):
        for H in all_subgroups(G):
            if coset_obstruction(G, H) is not None:
                assert search_transversal(G, H).outcome is SearchOutcome.EXHAUSTED


def test_search_agrees_with_construction_on_order4free():
    for G in ORDER4_FREE:
        for H in all_subgroups(G):
            constructed = order4free_transversal(G, H)
            searched = search_transversal(G, H)
            assert searched.is_witness
            check_certificate(G, H, constructed)
