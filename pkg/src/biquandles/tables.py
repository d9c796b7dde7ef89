"""Operation tables for finite quandles, biquandles and groups.

Elements are the indices ``0..n-1`` and a table is stored row-major with
``table[x][y]`` the value of ``x op y`` (left operand selects the row).
Every axiom check is exhaustive.
"""
from __future__ import annotations

from dataclasses import InitVar, dataclass, field
from itertools import permutations
from math import gcd
from typing import Sequence

from .errors import AxiomError, TableError
from .perms import Perm, compose, inverse

Table = tuple[tuple[int, ...], ...]

DEFAULT_VIOLATION_CAP = 16


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exhaustive axiom check.

    ``violations`` holds at most ``cap`` entries of ``(axiom_id, witness)``;
    ``total`` counts every failing instance found.
    """

    passed: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...] = ()
    total: int = 0

    @property
    def failed_axioms(self) -> set[str]:
        return {axiom for axiom, _ in self.violations}

    def __bool__(self) -> bool:
        return self.passed


class _Collector:
    def __init__(self, cap: int = DEFAULT_VIOLATION_CAP):
        self.cap = cap
        self.items: list[tuple[str, tuple[int, ...]]] = []
        self.total = 0

    def add(self, axiom: str, *witness: int) -> None:
        self.total += 1
        if len(self.items) < self.cap:
            self.items.append((axiom, tuple(witness)))

    def report(self) -> VerificationReport:
        return VerificationReport(self.total == 0, tuple(self.items), self.total)


def as_table(rows: Sequence[Sequence[int]], n: int | None = None) -> Table:
    """Normalize ``rows`` to a tuple-of-tuples table, checking shape and range."""
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise TableError(f"table entries must be integers: {exc}") from None
    if n is None:
        n = len(table)
    if n < 1:
        raise TableError("table must have at least one row")
    if len(table) != n:
        raise TableError(f"expected {n} rows, got {len(table)}")
    for x, row in enumerate(table):
        if len(row) != n:
            raise TableError(f"row {x} has {len(row)} entries, expected {n}")
        for y, v in enumerate(row):
            if not 0 <= v < n:
                raise TableError(f"entry ({x}, {y}) = {v} is outside 0..{n - 1}")
    return table


def column(table: Table, y: int) -> tuple[int, ...]:
    """The right translation ``x -> table[x][y]``."""
    return tuple(row[y] for row in table)


def table_from_columns(cols: Sequence[Sequence[int]]) -> Table:
    n = len(cols)
    return tuple(tuple(cols[y][x] for y in range(n)) for x in range(n))


def _check_columns_bijective(table: Table, axiom: str, out: _Collector) -> None:
    n = len(table)
    for y in range(n):
        seen: dict[int, int] = {}
        for x in range(n):
            v = table[x][y]
            if v in seen:
                out.add(axiom, y, seen[v], x)
            else:
                seen[v] = x


# -- verifiers ---------------------------------------------------------------

def verify_quandle(table: Sequence[Sequence[int]], cap: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    """Check idempotence (Q1), bijective columns (Q2), right self-distributivity (Q3).

    Witnesses: Q1 ``(x,)``; Q2 ``(y, x1, x2)`` with ``x1*y == x2*y``;
    Q3 ``(x, y, z)``.
    """
    op = as_table(table)
    n = len(op)
    out = _Collector(cap)
    for x in range(n):
        if op[x][x] != x:
            out.add("Q1", x)
    _check_columns_bijective(op, "Q2", out)
    for x in range(n):
        ox = op[x]
        for y in range(n):
            oxy = op[ox[y]]
            oy = op[y]
            for z in range(n):
                if oxy[z] != op[ox[z]][oy[z]]:
                    out.add("Q3", x, y, z)
    return out.report()


def verify_biquandle(under: Sequence[Sequence[int]], over: Sequence[Sequence[int]],
                     cap: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    """Check the biquandle axioms on ``under`` (x ⊻ y) and ``over`` (x ⊼ y).

    Axiom ids: ``B1`` diagonal law ``(x,)``; ``B2-under``/``B2-over`` column
    bijectivity ``(y, x1, x2)``; ``B2-S`` pair map collision
    ``(x1, y1, x2, y2)``; ``E1``..``E3`` exchange laws ``(x, y, z)``.
    """
    U = as_table(under)
    O = as_table(over)
    n = len(U)
    if len(O) != n:
        raise TableError(f"table sizes differ: {n} and {len(O)}")
    out = _Collector(cap)
    for x in range(n):
        if U[x][x] != O[x][x]:
            out.add("B1", x)
    _check_columns_bijective(U, "B2-under", out)
    _check_columns_bijective(O, "B2-over", out)
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for x in range(n):
        for y in range(n):
            image = (O[y][x], U[x][y])
            if image in seen:
                out.add("B2-S", *seen[image], x, y)
            else:
                seen[image] = (x, y)
    for x in range(n):
        for y in range(n):
            uxy, oxy = U[x][y], O[x][y]
            for z in range(n):
                uzy, ozy = U[z][y], O[z][y]
                uxz, oxz = U[x][z], O[x][z]
                oyz, uyz = O[y][z], U[y][z]
                if U[uxy][uzy] != U[uxz][oyz]:
                    out.add("E1", x, y, z)
                if O[uxy][uzy] != U[oxz][oyz]:
                    out.add("E2", x, y, z)
                if O[oxy][ozy] != O[oxz][uyz]:
                    out.add("E3", x, y, z)
    return out.report()


def _find_identity(mul: Table) -> int | None:
    n = len(mul)
    for e in range(n):
        if all(mul[e][x] == x and mul[x][e] == x for x in range(n)):
            return e
    return None


def verify_group(table: Sequence[Sequence[int]], cap: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    """Check associativity ``(a, b, c)``, identity ``()`` and inverses ``(a,)``."""
    mul = as_table(table)
    n = len(mul)
    out = _Collector(cap)
    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            for c in range(n):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    out.add("G-assoc", a, b, c)
    e = _find_identity(mul)
    if e is None:
        out.add("G-identity")
    else:
        for a in range(n):
            if not any(mul[a][b] == e and mul[b][a] == e for b in range(n)):
                out.add("G-inverse", a)
    return out.report()


# -- structures --------------------------------------------------------------

@dataclass(frozen=True)
class Quandle:
    """A finite quandle given by its operation table ``x * y``.

    Construction validates the axioms unless ``check=False``.
    """

    table: Table
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        object.__setattr__(self, "table", as_table(self.table))
        if check:
            report = verify_quandle(self.table)
            if not report.passed:
                raise AxiomError(f"not a quandle: {report.violations[:3]}", report)

    @property
    def n(self) -> int:
        return len(self.table)

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def symmetry(self, y: int) -> Perm:
        """The right translation ``S_y: x -> x * y``."""
        return column(self.table, y)


@dataclass(frozen=True)
class Biquandle:
    """A finite biquandle given by its ``under`` (x ⊻ y) and ``over`` (x ⊼ y) tables."""

    under: Table
    over: Table
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        object.__setattr__(self, "under", as_table(self.under))
        object.__setattr__(self, "over", as_table(self.over, len(self.under)))
        if check:
            report = verify_biquandle(self.under, self.over)
            if not report.passed:
                raise AxiomError(f"not a biquandle: {report.violations[:3]}", report)

    @property
    def n(self) -> int:
        return len(self.under)

    def alpha(self, y: int) -> Perm:
        return column(self.under, y)

    def beta(self, y: int) -> Perm:
        return column(self.over, y)

    def sort_key(self) -> tuple[Table, Table]:
        return (self.under, self.over)


@dataclass(frozen=True)
class Group:
    """A finite group from its Cayley table; identity and inverses are derived."""

    mul: Table
    identity: int = field(init=False)
    inv: tuple[int, ...] = field(init=False)
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        mul = as_table(self.mul)
        object.__setattr__(self, "mul", mul)
        if check:
            report = verify_group(mul)
            if not report.passed:
                raise AxiomError(f"not a group: {report.violations[:3]}", report)
        e = _find_identity(mul)
        if e is None:
            raise AxiomError("not a group: no identity")
        n = len(mul)
        inv = tuple(next(b for b in range(n) if mul[a][b] == e) for a in range(n))
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inv", inv)

    @property
    def n(self) -> int:
        return len(self.mul)

    def __call__(self, a: int, b: int) -> int:
        return self.mul[a][b]


# -- groups ------------------------------------------------------------------

def cyclic_group(n: int) -> Group:
    _check_order(n)
    return Group(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def symmetric_group(k: int) -> Group:
    """Cayley table of the symmetric group on ``k`` letters.

    Elements are the permutations of ``range(k)`` in lexicographic order,
    with ``a*b`` the composite ``a o b``.
    """
    _check_order(k)
    elems = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(elems)}
    return Group(tuple(tuple(index[compose(a, b)] for b in elems) for a in elems))


def klein_four_group() -> Group:
    return Group(tuple(tuple(a ^ b for b in range(4)) for a in range(4)))


# -- quandle families --------------------------------------------------------

def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise TableError(f"order must be a positive integer, got {n!r}")


def _check_unit(value: int, n: int, name: str) -> int:
    value %= n
    if gcd(value, n) != 1:
        raise TableError(f"{name}={value} is not a unit modulo {n}")
    return value


def trivial_quandle(n: int) -> Quandle:
    _check_order(n)
    return Quandle(tuple(tuple(x for _ in range(n)) for x in range(n)))


def dihedral_quandle(n: int) -> Quandle:
    """``x * y = 2y - x (mod n)``."""
    _check_order(n)
    return Quandle(tuple(tuple((2 * y - x) % n for y in range(n)) for x in range(n)))


def alexander_quandle(n: int, t: int) -> Quandle:
    """``x * y = t x + (1 - t) y`` over ``Z_n``; ``t`` must be a unit."""
    _check_order(n)
    t = _check_unit(t, n, "t")
    return Quandle(tuple(tuple((t * x + (1 - t) * y) % n for y in range(n)) for x in range(n)))


def conjugation_quandle(G: Group) -> Quandle:
    """``a * b = b^-1 a b``."""
    m, inv = G.mul, G.inv
    return Quandle(tuple(tuple(m[m[inv[b]][a]][b] for b in range(G.n)) for a in range(G.n)))


def core_quandle(G: Group) -> Quandle:
    """``a * b = b a^-1 b``."""
    m, inv = G.mul, G.inv
    return Quandle(tuple(tuple(m[m[b][inv[a]]][b] for b in range(G.n)) for a in range(G.n)))


# -- biquandle families ------------------------------------------------------

def dihedral_biquandle(n: int, s: int) -> Biquandle:
    """``x ⊻ y = (s+1) y - x`` and ``x ⊼ y = s x`` over ``Z_n``."""
    _check_order(n)
    s = _check_unit(s, n, "s")
    under = tuple(tuple(((s + 1) * y - x) % n for y in range(n)) for x in range(n))
    over = tuple(tuple((s * x) % n for _ in range(n)) for x in range(n))
    return Biquandle(under, over)


def alexander_biquandle(n: int, t: int, s: int) -> Biquandle:
    """``x ⊻ y = t x + (s - t) y`` and ``x ⊼ y = s x`` over ``Z_n``."""
    _check_order(n)
    t = _check_unit(t, n, "t")
    s = _check_unit(s, n, "s")
    under = tuple(tuple((t * x + (s - t) * y) % n for y in range(n)) for x in range(n))
    over = tuple(tuple((s * x) % n for _ in range(n)) for x in range(n))
    return Biquandle(under, over)


def wada_biquandle(G: Group) -> Biquandle:
    """``a ⊻ b = b^-1 a^-1 b`` and ``a ⊼ b = b^-2 a``."""
    m, inv, n = G.mul, G.inv, G.n
    under = tuple(tuple(m[m[inv[b]][inv[a]]][b] for b in range(n)) for a in range(n))
    over = tuple(tuple(m[m[inv[b]][inv[b]]][a] for b in range(n)) for a in range(n))
    return Biquandle(under, over)


def quandle_as_biquandle(Q: Quandle) -> Biquandle:
    """View ``Q`` as a biquandle with identity over-translations."""
    n = Q.n
    return Biquandle(Q.table, tuple(tuple(x for _ in range(n)) for x in range(n)))


def inverse_columns(table: Table) -> Table:
    """Table of ``x op^-1 y``, assuming every column is a permutation."""
    cols = [inverse(column(table, y)) for y in range(len(table))]
    return table_from_columns(cols)
