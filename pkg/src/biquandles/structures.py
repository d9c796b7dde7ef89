"""Biquandle structures on a quandle and the passage between the two views.

A biquandle structure on a quandle ``Q`` is a family ``betas`` of quandle
automorphisms, one per element, subject to a coherence condition and to
``y -> betas[y][y]`` being a bijection. ``realize`` turns such a family into
a biquandle; ``extract_structure`` recovers the family from any biquandle.
"""
from __future__ import annotations

from dataclasses import InitVar, dataclass
from typing import Sequence

from .errors import AxiomError, ConsistencyError, TableError
from .perms import Perm, compose, inverse, is_permutation
from .tables import (
    DEFAULT_VIOLATION_CAP,
    Biquandle,
    Group,
    Quandle,
    VerificationReport,
    _Collector,
    core_quandle,
)


def _normalize_betas(base: Quandle, betas: Sequence[Sequence[int]]) -> tuple[Perm, ...]:
    n = base.n
    if len(betas) != n:
        raise TableError(f"expected {n} maps, got {len(betas)}")
    out = []
    for y, b in enumerate(betas):
        b = tuple(int(v) for v in b)
        if not is_permutation(b, n):
            raise TableError(f"map {y} is not a permutation of 0..{n - 1}: {b}")
        out.append(b)
    return tuple(out)


def verify_structure(base: Quandle, betas: Sequence[Sequence[int]],
                     cap: int = DEFAULT_VIOLATION_CAP) -> VerificationReport:
    """Check that ``betas`` is a biquandle structure on ``base``.

    Axiom ids: ``S-aut`` ``(y, a, b)`` where ``betas[y]`` breaks
    ``beta(a*b) = beta(a)*beta(b)``; ``S-coherence`` ``(x, y, a)`` where the two
    composites differ at ``a``; ``S-diagonal`` ``(y1, y2)`` with
    ``betas[y1][y1] == betas[y2][y2]``.
    """
    betas = _normalize_betas(base, betas)
    op = base.table
    n = base.n
    out = _Collector(cap)
    for y, b in enumerate(betas):
        for u in range(n):
            for v in range(n):
                if b[op[u][v]] != op[b[u]][b[v]]:
                    out.add("S-aut", y, u, v)
    for x in range(n):
        for y in range(n):
            lhs = compose(betas[betas[y][op[x][y]]], betas[y])
            rhs = compose(betas[betas[x][y]], betas[x])
            if lhs != rhs:
                a = next(i for i in range(n) if lhs[i] != rhs[i])
                out.add("S-coherence", x, y, a)
    seen: dict[int, int] = {}
    for y in range(n):
        d = betas[y][y]
        if d in seen:
            out.add("S-diagonal", seen[d], y)
        else:
            seen[d] = y
    return out.report()


@dataclass(frozen=True)
class BiquandleStructure:
    """A quandle together with one automorphism ``betas[y]`` per element."""

    base: Quandle
    betas: tuple[Perm, ...]
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        object.__setattr__(self, "betas", _normalize_betas(self.base, self.betas))
        if check:
            report = verify_structure(self.base, self.betas)
            if not report.passed:
                raise AxiomError(f"not a biquandle structure: {report.violations[:3]}", report)

    @property
    def n(self) -> int:
        return self.base.n

    def is_constant(self) -> bool:
        return len(set(self.betas)) == 1

    def sort_key(self):
        return (self.base.table, self.betas)


def constant_structure(base: Quandle, f: Sequence[int]) -> BiquandleStructure:
    """The structure with every ``betas[y] == f``; ``f`` must be an automorphism."""
    f = tuple(f)
    if not is_permutation(f, base.n):
        raise TableError(f"not a permutation of 0..{base.n - 1}: {f}")
    op = base.table
    for u in range(base.n):
        for v in range(base.n):
            if f[op[u][v]] != op[f[u]][f[v]]:
                raise AxiomError(f"{f} is not an automorphism of the quandle (fails at {u}, {v})")
    return BiquandleStructure(base, (f,) * base.n, check=False)


def wada_structure(G: Group) -> BiquandleStructure:
    """``betas[y](a) = y^-2 a`` on the core quandle ``a * b = b a^-1 b``."""
    m, inv = G.mul, G.inv
    betas = tuple(tuple(m[m[inv[y]][inv[y]]][a] for a in range(G.n)) for y in range(G.n))
    return BiquandleStructure(core_quandle(G), betas)


def realize(S: BiquandleStructure, validate: bool = True) -> Biquandle:
    """Build the biquandle ``x ⊻ y = betas[y](x*y)``, ``x ⊼ y = betas[y](x)``.

    ``validate=False`` skips re-checking ``S`` and the resulting tables, for
    bulk use on structures that were already verified.
    """
    if validate:
        report = verify_structure(S.base, S.betas)
        if not report.passed:
            raise AxiomError(f"not a biquandle structure: {report.violations[:3]}", report)
    op, betas, n = S.base.table, S.betas, S.n
    under = tuple(tuple(betas[y][op[x][y]] for y in range(n)) for x in range(n))
    over = tuple(tuple(betas[y][x] for y in range(n)) for x in range(n))
    return Biquandle(under, over, check=validate)


def _quandle_table(B: Biquandle):
    inv_betas = [inverse(B.beta(y)) for y in range(B.n)]
    return tuple(tuple(inv_betas[y][B.under[x][y]] for y in range(B.n)) for x in range(B.n))


def underlying_quandle(B: Biquandle) -> Quandle:
    """The quandle ``x * y = betas[y]^-1 (x ⊻ y)``.

    Always a quandle when ``B`` is a biquandle; the result is verified and a
    failure is reported as a consistency error.
    """
    try:
        return Quandle(_quandle_table(B))
    except AxiomError as exc:
        raise ConsistencyError(f"underlying table of a biquandle is not a quandle: {exc}") from exc


def extract_structure(B: Biquandle) -> BiquandleStructure:
    """Recover the structure ``(underlying_quandle(B), over-columns)``.

    The result is always verified; every biquandle is expected to yield a
    valid structure, so failure raises ``ConsistencyError``.
    """
    base = underlying_quandle(B)
    betas = tuple(B.beta(y) for y in range(B.n))
    report = verify_structure(base, betas)
    if not report.passed:
        raise ConsistencyError(f"over-columns of a biquandle are not a structure: {report.violations[:3]}")
    return BiquandleStructure(base, betas, check=False)

