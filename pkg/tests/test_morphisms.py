from itertools import permutations
from math import factorial, gcd

import pytest

from biquandles.enumeration import enumerate_structures
from biquandles.errors import CapExceeded, TableError
from biquandles.morphisms import (
    PermGroup,
    affine_group,
    affine_map,
    biquandle_aut_group,
    biquandle_isomorphism,
    centralizer,
    classify_constant_structures,
    conjugacy_classes,
    dihedral_biquandle_aut,
    find_homomorphisms,
    groups_isomorphic,
    inner_group,
    is_biquandle_hom,
    is_quandle_hom,
    quandle_aut_group,
    setwise_normalizer,
    structures_isomorphic,
)
from biquandles.perms import from_cycles
from biquandles.structures import constant_structure, extract_structure, realize, underlying_quandle
from biquandles.tables import (
    Biquandle,
    alexander_biquandle,
    alexander_quandle,
    cyclic_group,
    dihedral_biquandle,
    dihedral_quandle,
    quandle_as_biquandle,
    trivial_quandle,
    wada_biquandle,
)

from oracles import all_bijections, closure, comp, conj_classes, group_iso_exists, inv, preserves

R3 = dihedral_quandle(3)
SWAP_BQ = Biquandle(((1, 1), (0, 0)), ((1, 1), (0, 0)))


def _oracle_aut(B):
    return all_bijections([(B.under, B.under), (B.over, B.over)], B.n)


# -- homomorphism predicates --------------------------------------------------

def test_is_quandle_hom_examples():
    assert is_quandle_hom(R3, R3, (0, 1, 2))
    assert is_quandle_hom(R3, R3, (0, 2, 1))
    assert is_quandle_hom(R3, R3, (0, 0, 0))


def test_is_quandle_hom_rejects_bad_map():
    with pytest.raises(TableError):
        is_quandle_hom(R3, R3, (0, 1))


def test_is_biquandle_hom_examples():
    W = wada_biquandle(cyclic_group(3))
    assert is_biquandle_hom(W, W, (0, 1, 2))
    shift = (1, 2, 0)
    expected = preserves(shift, W.under, W.under) and preserves(shift, W.over, W.over)
    assert is_biquandle_hom(W, W, shift) == expected
    # F(-a) = 1 - a but -F(a) = -1 - a, so the translation is not a homomorphism
    assert expected is False
    triv = quandle_as_biquandle(trivial_quandle(2))
    assert is_biquandle_hom(triv, triv, (1, 0))


def test_find_homomorphisms_lexicographic():
    Q = dihedral_quandle(5)
    maps = list(find_homomorphisms([(Q.table, Q.table)], 5, 5, injective=False))
    assert maps == sorted(maps)
    brute = [F for F in permutations(range(5)) if preserves(F, Q.table, Q.table)]
    assert [F for F in maps if len(set(F)) == 5] == brute


# -- automorphism groups ------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_aut_trivial_quandle_is_symmetric(n):
    assert quandle_aut_group(trivial_quandle(n)).order == factorial(n)


@pytest.mark.parametrize("n,order", [(3, 6), (5, 20)])
def test_aut_dihedral_quandle(n, order):
    Q = dihedral_quandle(n)
    G = quandle_aut_group(Q)
    assert G.order == order
    assert list(G.elements) == all_bijections([(Q.table, Q.table)], n)
    assert G.element_set == affine_group(n).element_set


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_aut_search_matches_naive(n):
    Q = dihedral_quandle(n)
    assert quandle_aut_group(Q) == quandle_aut_group(Q, oracle=True)


def test_naive_cap():
    with pytest.raises(CapExceeded):
        quandle_aut_group(dihedral_quandle(9), oracle=True)


def test_inner_group():
    assert inner_group(trivial_quandle(3)).order == 1
    assert inner_group(dihedral_quandle(1)).order == 1
    G = inner_group(R3)
    assert G.element_set == closure([R3.symmetry(y) for y in range(3)], 3)
    assert G.order == 6
    assert G.verify().passed


def test_biquandle_aut_group_examples():
    Q = dihedral_quandle(5)
    B = realize(constant_structure(Q, tuple(range(5))))
    assert biquandle_aut_group(B) == quandle_aut_group(Q)
    B52 = dihedral_biquandle(5, 2)
    G = biquandle_aut_group(B52)
    assert G.order == 4
    assert list(G.elements) == _oracle_aut(B52)
    assert biquandle_aut_group(SWAP_BQ).order == 2


@pytest.mark.parametrize("B", [wada_biquandle(cyclic_group(3)), alexander_biquandle(5, 2, 3),
                               dihedral_biquandle(4, 1), SWAP_BQ])
def test_biquandle_aut_matches_direct_definition(B):
    assert list(biquandle_aut_group(B).elements) == _oracle_aut(B)
    assert biquandle_aut_group(B, oracle=True) == biquandle_aut_group(B)


# -- permutation group services -----------------------------------------------

S3 = PermGroup.from_elements(3, permutations(range(3)))
C4 = PermGroup.from_generators(4, [(1, 2, 3, 0)])
V4 = PermGroup.from_generators(4, [(1, 0, 3, 2), (2, 3, 0, 1)])


def test_permgroup_verify():
    assert S3.verify().passed and C4.verify().passed
    broken = PermGroup(3, ((0, 1, 2), (1, 2, 0)))
    assert not broken.verify().passed


def test_conjugacy_classes_examples():
    classes = conjugacy_classes(S3)
    assert sorted(len(c) for c in classes) == [1, 2, 3]
    assert len(conjugacy_classes(PermGroup.from_generators(3, []))) == 1
    assert len(conjugacy_classes(C4)) == 4


@pytest.mark.parametrize("G", [S3, C4, V4, affine_group(5), affine_group(6)], ids=str)
def test_conjugacy_classes_match_oracle(G):
    ours = {frozenset(c) for c in conjugacy_classes(G)}
    theirs = {frozenset(c) for c in conj_classes(G.elements)}
    assert ours == theirs


def test_centralizer_examples():
    assert centralizer(S3, (0, 1, 2)) == S3
    A5 = affine_group(5)
    C = centralizer(A5, affine_map(2, 0, 5))
    assert C.element_set == {affine_map(a, 0, 5) for a in range(1, 5)}
    assert all(centralizer(C4, f) == C4 for f in C4)


def test_centralizer_requires_member():
    with pytest.raises(TableError):
        centralizer(C4, (1, 0, 2, 3))


def test_setwise_normalizer_examples():
    assert setwise_normalizer(S3, [(0, 1, 2)]) == S3
    assert setwise_normalizer(S3, S3.elements) == S3
    N = setwise_normalizer(S3, [(1, 0, 2)])
    assert N.order == 2
    brute = [g for g in S3 if comp(comp(g, (1, 0, 2)), inv(g)) == (1, 0, 2)]
    assert list(N.elements) == brute


def test_classify_constant_structures_examples():
    assert len(classify_constant_structures(R3)) == 3
    assert classify_constant_structures(trivial_quandle(2)) == [((0, 1), 1), ((1, 0), 1)]
    assert classify_constant_structures(trivial_quandle(1)) == [((0,), 1)]


def test_affine_group():
    assert affine_group(3).order == 6
    assert affine_group(1).order == 1
    assert affine_group(5).order == 20
    for n in range(1, 9):
        phi = sum(1 for a in range(n) if gcd(a, n) == 1)
        G = affine_group(n)
        assert G.order == n * phi and G.verify().passed


@pytest.mark.parametrize("n,s,order", [(5, 2, 4), (3, 1, 6), (7, 2, 6)])
def test_dihedral_biquandle_aut(n, s, order):
    G = dihedral_biquandle_aut(n, s)
    assert G.order == order
    assert list(G.elements) == _oracle_aut(dihedral_biquandle(n, s))


def test_dihedral_biquandle_aut_hypothesis_fails():
    with pytest.raises(TableError, match="biquandle_aut_group"):
        dihedral_biquandle_aut(5, 4)


def test_groups_isomorphic_examples():
    assert groups_isomorphic(S3, S3).found
    assert not groups_isomorphic(C4, V4).found
    res = groups_isomorphic(affine_group(3), S3)
    assert res.found
    A3 = affine_group(3)
    phi = {g: S3.elements[i] for g, i in zip(A3.elements, res.witness)}
    assert len(set(phi.values())) == 6
    assert all(phi[comp(a, b)] == comp(phi[a], phi[b]) for a in A3 for b in A3)


@pytest.mark.parametrize("G,H", [
    (affine_group(4), PermGroup.from_generators(4, [(1, 2, 3, 0), (0, 3, 2, 1)])),  # D4 both
    (C4, V4),
    (affine_group(5), quandle_aut_group(dihedral_quandle(5))),
    (PermGroup.from_generators(6, [(1, 2, 3, 4, 5, 0)]), affine_group(3)),
])
def test_groups_isomorphic_matches_oracle(G, H):
    assert groups_isomorphic(G, H).found == group_iso_exists(G.elements, H.elements)


# -- structural identities over small corpora ---------------------------------

STRUCTURE_CENSUSES = [enumerate_structures(Q) for Q in (trivial_quandle(2), trivial_quandle(3), R3)]


@pytest.mark.parametrize("census", STRUCTURE_CENSUSES, ids=["T2", "T3", "R3"])
def test_aut_inside_setwise_normalizer(census):
    AQ = quandle_aut_group(census.base)
    for S in census.all:
        AB = biquandle_aut_group(realize(S))
        N = setwise_normalizer(AQ, set(S.betas))
        assert AB.element_set <= N.element_set


@pytest.mark.parametrize("Q", [R3, dihedral_quandle(4), dihedral_quandle(5), trivial_quandle(3)],
                         ids=["R3", "R4", "R5", "T3"])
def test_constant_structure_aut_is_centralizer(Q):
    AQ = quandle_aut_group(Q)
    for f in AQ:
        assert biquandle_aut_group(realize(constant_structure(Q, f))) == centralizer(AQ, f)


@pytest.mark.parametrize("t,s", [(t, s) for t in range(1, 5) for s in range(1, 5)])
def test_alexander_biquandle_aut_is_centralizer_of_s(t, s):
    B = alexander_biquandle(5, t, s)
    Q = underlying_quandle(B)
    s_inv = pow(s, -1, 5)
    assert Q == alexander_quandle(5, s_inv * t)
    AQ = quandle_aut_group(Q)
    assert biquandle_aut_group(B) == centralizer(AQ, affine_map(s, 0, 5))


@pytest.mark.parametrize("census", STRUCTURE_CENSUSES, ids=["T2", "T3", "R3"])
def test_structure_isomorphism_matches_biquandle_isomorphism(census):
    for S1 in census.all:
        for S2 in census.all:
            res = structures_isomorphic(S1, S2)
            B1, B2 = realize(S1), realize(S2)
            direct = biquandle_isomorphism(B1, B2, oracle=True)
            assert res.found == direct.found
            if res.found:
                F = res.witness
                assert is_quandle_hom(S1.base, S2.base, F)
                assert all(comp(F, S1.betas[y]) == comp(S2.betas[F[y]], F) for y in range(S1.n))
                assert is_biquandle_hom(B1, B2, F)


def test_structures_isomorphic_examples():
    S = extract_structure(dihedral_biquandle(5, 2))
    assert structures_isomorphic(S, S).witness == tuple(range(5))
    T3 = trivial_quandle(3)
    f, g = (1, 0, 2), (2, 1, 0)  # two transpositions, conjugate in S3
    res = structures_isomorphic(constant_structure(T3, f), constant_structure(T3, g))
    assert res.found and comp(res.witness, f) == comp(g, res.witness)
    three_cycle = from_cycles(3, [(0, 1, 2)])
    res = structures_isomorphic(constant_structure(T3, f), constant_structure(T3, three_cycle))
    assert not res.found


@pytest.mark.parametrize("Q", [trivial_quandle(2), trivial_quandle(3), R3, dihedral_quandle(4)],
                         ids=["T2", "T3", "R3", "R4"])
def test_constant_classes_pairwise_non_isomorphic(Q):
    reps = classify_constant_structures(Q)
    assert len(reps) == len(conj_classes(all_bijections([(Q.table, Q.table)], Q.n)))
    bqs = [realize(constant_structure(Q, f)) for f, _ in reps]
    for i, A in enumerate(bqs):
        for B in bqs[i + 1:]:
            assert not biquandle_isomorphism(A, B, oracle=True).found
