"""Exhaustive censuses: structures on a fixed quandle, and raw biquandles of small order.

The raw census knows nothing about structures; it is the oracle against which
the structure census is checked member for member.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial

from .errors import CapExceeded, ConsistencyError
from .morphisms import quandle_aut_group, structures_isomorphic
from .perms import Perm, compose
from .structures import BiquandleStructure, extract_structure, realize, verify_structure
from .tables import Biquandle, Quandle, table_from_columns, verify_biquandle, verify_quandle

STRUCTURE_MAX_ORDER = 6
STRUCTURE_MAX_AUT = 24
BRUTEFORCE_MAX_ORDER = 3


@dataclass(frozen=True)
class StructureCensus:
    base: Quandle
    all: tuple[BiquandleStructure, ...]
    classes: tuple[tuple[int, ...], ...]  # indices into ``all``
    representatives: tuple[BiquandleStructure, ...]

    @property
    def count(self) -> int:
        return len(self.all)


@dataclass(frozen=True)
class BiquandleCensus:
    order: int
    all: tuple[Biquandle, ...]

    @property
    def count(self) -> int:
        return len(self.all)


def structure_families(Q: Quandle, max_order: int = STRUCTURE_MAX_ORDER,
                       max_aut: int = STRUCTURE_MAX_AUT) -> list[tuple[Perm, ...]]:
    """Every family of automorphisms of ``Q`` that is a biquandle structure, sorted."""
    if Q.n > max_order:
        raise CapExceeded(f"quandle order {Q.n} exceeds max_order={max_order}")
    aut = quandle_aut_group(Q).elements
    if len(aut) > max_aut:
        raise CapExceeded(f"|Aut(Q)| = {len(aut)} exceeds max_aut={max_aut}")
    n, op = Q.n, Q.table
    found = []
    betas: list[Perm] = []
    diag_used = [False] * n

    def coherent(k: int) -> bool:
        # pairs whose four indices are all assigned, with k among them
        for x in range(k + 1):
            bx = betas[x]
            for y in range(k + 1):
                by = betas[y]
                u, v = by[op[x][y]], bx[y]
                if u > k or v > k or k not in (x, y, u, v):
                    continue
                if compose(betas[u], by) != compose(betas[v], bx):
                    return False
        return True

    def search(k: int) -> None:
        if k == n:
            found.append(tuple(betas))
            return
        for b in aut:
            d = b[k]
            if diag_used[d]:
                continue
            betas.append(b)
            diag_used[d] = True
            if coherent(k):
                search(k + 1)
            diag_used[d] = False
            betas.pop()

    search(0)
    return sorted(found)


def enumerate_structures(Q: Quandle, max_order: int = STRUCTURE_MAX_ORDER,
                         max_aut: int = STRUCTURE_MAX_AUT) -> StructureCensus:
    """All biquandle structures on ``Q``, grouped into isomorphism classes."""
    structs = tuple(BiquandleStructure(Q, b, check=False)
                    for b in structure_families(Q, max_order, max_aut))
    classes: list[list[int]] = []
    for i, S in enumerate(structs):
        for cls in classes:
            if structures_isomorphic(structs[cls[0]], S).found:
                cls.append(i)
                break
        else:
            classes.append([i])
    return StructureCensus(
        Q, structs, tuple(tuple(c) for c in classes), tuple(structs[c[0]] for c in classes))


def _column_tables(n: int):
    perms = list(permutations(range(n)))
    for cols in product(perms, repeat=n):
        yield table_from_columns(cols)


def _check_bruteforce_cap(n: int, max_order: int) -> None:
    if n < 1:
        raise CapExceeded(f"order must be positive, got {n}")
    if n > max_order:
        raise CapExceeded(
            f"order {n} exceeds max_order={max_order} "
            f"({factorial(n) ** (2 * n)} candidate table pairs)")


def enumerate_biquandles_bruteforce(n: int, max_order: int = BRUTEFORCE_MAX_ORDER) -> BiquandleCensus:
    """Every pair of tables on ``n`` elements satisfying the biquandle axioms.

    Candidates have permutation columns in both tables; they are bucketed by
    diagonal so only pairs obeying the diagonal law are fully verified.
    """
    _check_bruteforce_cap(n, max_order)
    tables = list(_column_tables(n))
    by_diag: dict[tuple[int, ...], list] = {}
    for T in tables:
        by_diag.setdefault(tuple(T[x][x] for x in range(n)), []).append(T)
    found = []
    for U in tables:
        for O in by_diag.get(tuple(U[x][x] for x in range(n)), ()):
            if verify_biquandle(U, O, cap=1).passed:
                found.append(Biquandle(U, O, check=False))
    found.sort(key=Biquandle.sort_key)
    unique = [B for i, B in enumerate(found) if i == 0 or B != found[i - 1]]
    return BiquandleCensus(n, tuple(unique))


def enumerate_quandles_bruteforce(n: int, max_order: int = BRUTEFORCE_MAX_ORDER) -> list[Quandle]:
    """Every quandle table on ``n`` elements (not up to isomorphism)."""
    _check_bruteforce_cap(n, max_order)
    return sorted((Quandle(T, check=False) for T in _column_tables(n)
                   if all(T[x][x] == x for x in range(n)) and verify_quandle(T, cap=1).passed),
                  key=lambda Q: Q.table)


@dataclass(frozen=True)
class CrosscheckReport:
    order: int
    census: int
    roundtrip: int
    quandles: int
    structures: int

    def summary(self) -> str:
        return (f"census={self.census}, roundtrip={self.roundtrip}/{self.census}, "
                f"quandles={self.quandles}, structures={self.structures}")


def census_crosscheck(n: int, max_order: int = BRUTEFORCE_MAX_ORDER) -> CrosscheckReport:
    """Compare the raw biquandle census of order ``n`` with the structure censuses.

    Every raw biquandle must round-trip through its structure, and for each
    underlying quandle the realized structures must be exactly the raw
    biquandles over that quandle. Any mismatch raises ``ConsistencyError``.
    """
    census = enumerate_biquandles_bruteforce(n, max_order)
    by_quandle: dict = {}
    roundtrip = 0
    for B in census.all:
        S = extract_structure(B)
        if not verify_structure(S.base, S.betas).passed:
            raise ConsistencyError(f"structure check failed for {B}")
        if realize(S) != B:
            raise ConsistencyError(f"realize(extract(B)) != B for {B}")
        roundtrip += 1
        by_quandle.setdefault(S.base, set()).add(B)
    n_structs = 0
    for Q, members in sorted(by_quandle.items(), key=lambda kv: kv[0].table):
        realized = {realize(S, validate=False) for S in enumerate_structures(Q).all}
        n_structs += len(realized)
        if realized != members:
            extra = sorted(realized - members, key=Biquandle.sort_key)
            missing = sorted(members - realized, key=Biquandle.sort_key)
            raise ConsistencyError(
                f"census mismatch over quandle {Q.table}: "
                f"only in structures {extra[:1]}, only in raw census {missing[:1]}")
    return CrosscheckReport(n, census.count, roundtrip, len(by_quandle), n_structs)
