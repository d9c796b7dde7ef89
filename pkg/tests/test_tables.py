import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biquandles.errors import AxiomError, TableError
from biquandles.tables import (
    Biquandle,
    Quandle,
    alexander_biquandle,
    alexander_quandle,
    conjugation_quandle,
    core_quandle,
    cyclic_group,
    dihedral_biquandle,
    dihedral_quandle,
    klein_four_group,
    quandle_as_biquandle,
    symmetric_group,
    trivial_quandle,
    verify_biquandle,
    verify_group,
    verify_quandle,
    wada_biquandle,
)

from oracles import biquandle_axioms, quandle_axioms

R3_ROWS = ((0, 2, 1), (2, 1, 0), (1, 0, 2))


# -- verify_quandle ----------------------------------------------------------

def test_verify_quandle_dihedral3():
    report = verify_quandle(R3_ROWS)
    assert report.passed and report.violations == ()
    assert quandle_axioms(R3_ROWS)


def test_verify_quandle_trivial4():
    assert verify_quandle([[x] * 4 for x in range(4)]).passed


def test_verify_quandle_idempotence_failure():
    report = verify_quandle([[1, 0], [1, 1]])
    assert not report.passed
    assert ("Q1", (0,)) in report.violations


@pytest.mark.parametrize("rows", [
    [[0, 1], [1]],
    [[0, 2], [1, 1]],
    [[0, -1], [1, 1]],
    [],
])
def test_verify_quandle_malformed(rows):
    with pytest.raises(TableError):
        verify_quandle(rows)


def test_violation_cap():
    # every pair fails idempotence/bijectivity in the constant-zero table
    report = verify_quandle([[0] * 5 for _ in range(5)], cap=3)
    assert not report.passed
    assert len(report.violations) == 3
    assert report.total > 3


# -- verify_biquandle --------------------------------------------------------

def test_verify_biquandle_pair_map_not_bijective():
    # columns: y=0 identity, y=1 swap; same table for both operations
    T = [[0, 1], [1, 0]]
    report = verify_biquandle(T, T)
    assert not report.passed
    assert ("B2-S", (0, 1, 1, 0)) in report.violations


def test_verify_biquandle_trivial():
    T = [[0, 0], [1, 1]]
    assert verify_biquandle(T, T).passed


def test_verify_biquandle_wada_z3():
    U = [[(-a) % 3 for b in range(3)] for a in range(3)]
    O = [[(a - 2 * b) % 3 for b in range(3)] for a in range(3)]
    assert verify_biquandle(U, O).passed
    assert biquandle_axioms(U, O)


def test_verify_biquandle_size_mismatch():
    with pytest.raises(TableError):
        verify_biquandle([[0]], [[0, 0], [1, 1]])


# -- quandle families --------------------------------------------------------

def test_dihedral_quandle_values():
    assert dihedral_quandle(3).table == R3_ROWS
    assert dihedral_quandle(1).table == ((0,),)
    assert dihedral_quandle(4).table[0] == (0, 2, 0, 2)


def test_dihedral_quandle_zero():
    with pytest.raises(TableError):
        dihedral_quandle(0)


def test_alexander_quandle():
    assert alexander_quandle(5, 1) == trivial_quandle(5)
    assert alexander_quandle(3, 2) == dihedral_quandle(3)
    assert alexander_quandle(5, 3).table[1][0] == 3
    with pytest.raises(TableError):
        alexander_quandle(4, 2)


def test_conjugation_quandle():
    assert conjugation_quandle(cyclic_group(4)) == trivial_quandle(4)
    assert conjugation_quandle(klein_four_group()) == trivial_quandle(4)
    Q = conjugation_quandle(symmetric_group(3))
    assert Q.n == 6 and quandle_axioms(Q.table)
    assert conjugation_quandle(cyclic_group(1)).table == ((0,),)


def test_core_quandle():
    assert core_quandle(cyclic_group(3)) == dihedral_quandle(3)
    assert core_quandle(cyclic_group(2)) == trivial_quandle(2)
    assert core_quandle(cyclic_group(1)).table == ((0,),)


def test_trivial_quandle():
    assert trivial_quandle(2).table == ((0, 0), (1, 1))
    assert trivial_quandle(1).table == ((0,),)
    assert verify_quandle(trivial_quandle(3).table).passed


def test_quandle_constructor_rejects_non_quandle():
    with pytest.raises(AxiomError) as info:
        Quandle([[1, 0], [1, 1]])
    assert not info.value.report.passed


# -- biquandle families ------------------------------------------------------

def test_dihedral_biquandle_s1():
    B = dihedral_biquandle(3, 1)
    assert B.under == dihedral_quandle(3).table
    assert all(B.beta(y) == (0, 1, 2) for y in range(3))


def test_dihedral_biquandle_5_2():
    B = dihedral_biquandle(5, 2)
    for x in range(5):
        for y in range(5):
            assert B.under[x][y] == (3 * y - x) % 5
            assert B.over[x][y] == (2 * x) % 5
    assert B.under[1][0] == 4
    assert biquandle_axioms(B.under, B.over)


def test_dihedral_biquandle_non_unit():
    with pytest.raises(TableError):
        dihedral_biquandle(4, 2)


def test_alexander_biquandle():
    B = alexander_biquandle(5, 2, 3)
    assert B.under == tuple(tuple((2 * x + y) % 5 for y in range(5)) for x in range(5))
    assert B.over == tuple(tuple((3 * x) % 5 for _ in range(5)) for x in range(5))
    same = alexander_biquandle(5, 2, 2)
    assert same.under == same.over
    with pytest.raises(TableError):
        alexander_biquandle(6, 5, 3)


def test_wada_biquandle():
    B = wada_biquandle(cyclic_group(3))
    assert B.under == tuple(tuple((-a) % 3 for b in range(3)) for a in range(3))
    assert B.over == tuple(tuple((a - 2 * b) % 3 for b in range(3)) for a in range(3))
    assert wada_biquandle(cyclic_group(1)).n == 1
    S3 = wada_biquandle(symmetric_group(3))
    assert S3.n == 6 and biquandle_axioms(S3.under, S3.over)


# -- groups ------------------------------------------------------------------

def test_verify_group():
    assert verify_group(cyclic_group(3).mul).passed
    assert verify_group(symmetric_group(3).mul).passed
    # x*y = x - y mod 3 is not associative
    bad = [[(a - b) % 3 for b in range(3)] for a in range(3)]
    report = verify_group(bad)
    assert not report.passed and "G-assoc" in report.failed_axioms


def test_group_derived_fields():
    G = symmetric_group(3)
    assert G.identity == 0
    assert all(G.mul[a][G.inv[a]] == G.identity for a in range(6))


# -- family grid and invariants ----------------------------------------------

@pytest.mark.parametrize("n", range(1, 9))
def test_dihedral_grid(n):
    assert quandle_axioms(dihedral_quandle(n).table)


@given(st.integers(1, 12))
def test_dihedral_biquandle_s1_is_quandle(n):
    B = dihedral_biquandle(n, 1)
    assert B.under == dihedral_quandle(n).table
    assert all(B.beta(y) == tuple(range(n)) for y in range(n))


@st.composite
def column_tables(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    cols = [draw(st.permutations(range(n))) for _ in range(n)]
    return tuple(tuple(cols[y][x] for y in range(n)) for x in range(n))


@settings(max_examples=200)
@given(column_tables())
def test_identity_over_biquandle_iff_quandle(T):
    n = len(T)
    ident_over = tuple(tuple(x for _ in range(n)) for x in range(n))
    assert verify_biquandle(T, ident_over).passed == verify_quandle(T).passed


@settings(max_examples=200)
@given(column_tables(3), column_tables(3))
def test_verify_biquandle_matches_oracle(U, O):
    if len(U) != len(O):
        return
    assert verify_biquandle(U, O).passed == biquandle_axioms(U, O)


@settings(max_examples=200)
@given(column_tables())
def test_verify_quandle_matches_oracle(T):
    assert verify_quandle(T).passed == quandle_axioms(T)


def test_quandle_as_biquandle():
    Q = dihedral_quandle(5)
    B = quandle_as_biquandle(Q)
    assert isinstance(B, Biquandle) and B.under == Q.table
