"""Product biquandles of two quandles, connected components, and their automorphisms.

Elements of ``Q x K`` are flattened with ``(x, a) -> x * K.n + a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Sequence

from .errors import CapExceeded, ConsistencyError, TableError
from .morphisms import (
    PermGroup,
    biquandle_aut_group,
    find_homomorphisms,
    is_biquandle_hom,
    quandle_aut_group,
)
from .perms import Perm, is_permutation
from .tables import Biquandle, Quandle, VerificationReport, _Collector

DECOMPOSITION_MAX_ORDER = 12


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return tuple(sorted(tuple(b) for b in groups.values()))


@dataclass(frozen=True)
class ComponentPartition:
    """Disjoint sorted blocks covering ``0..n-1``, ordered by least element."""

    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> list[int]:
        """``result[x]`` is the index of the block containing ``x``."""
        where = [0] * sum(len(b) for b in self.blocks)
        for i, b in enumerate(self.blocks):
            for x in b:
                where[x] = i
        return where

    @property
    def connected(self) -> bool:
        return len(self.blocks) == 1


def _components(n: int, tables: Iterable) -> ComponentPartition:
    uf = UnionFind(n)
    for T in tables:
        for x in range(n):
            for y in range(n):
                uf.union(x, T[x][y])
    return ComponentPartition(uf.blocks())


def quandle_components(Q: Quandle) -> ComponentPartition:
    """Orbits of the inner group: ``x`` joined to every ``x * y``."""
    return _components(Q.n, [Q.table])


def biquandle_components(B: Biquandle) -> ComponentPartition:
    """Classes of the equivalence generated by ``x ~ x ⊻ y`` and ``x ~ x ⊼ y``."""
    return _components(B.n, [B.under, B.over])


@dataclass(frozen=True)
class ProductBiquandle:
    biquandle: Biquandle
    left: Quandle
    right: Quandle

    def encode(self, x: int, a: int) -> int:
        return x * self.right.n + a

    def decode(self, i: int) -> tuple[int, int]:
        return divmod(i, self.right.n)

    @property
    def n(self) -> int:
        return self.biquandle.n


def product_biquandle(Q: Quandle, K: Quandle) -> ProductBiquandle:
    """``(x,a) ⊻ (y,b) = (x*y, a)`` and ``(x,a) ⊼ (y,b) = (x, a∘b)``."""
    m = K.n
    pairs = [divmod(i, m) for i in range(Q.n * m)]
    under = tuple(tuple(Q.table[x][y] * m + a for (y, _) in pairs) for (x, a) in pairs)
    over = tuple(tuple(x * m + K.table[a][b] for (_, b) in pairs) for (x, a) in pairs)
    return ProductBiquandle(Biquandle(under, over), Q, K)


def product_map(f: Sequence[int], g: Sequence[int]) -> Perm:
    """``f x g`` as a map on flat indices."""
    m = len(g)
    return tuple(f[x] * m + g[a] for x in range(len(f)) for a in range(m))


@dataclass(frozen=True)
class ProductAut:
    group: PermGroup
    from_factors: bool  # False when the fallback search was used


def product_aut_group(Q: Quandle, K: Quandle) -> ProductAut:
    """Automorphisms of the product biquandle.

    For connected factors this is ``{f x g}`` over ``Aut(Q) x Aut(K)``;
    otherwise the product is searched directly and ``from_factors`` is False.
    """
    if quandle_components(Q).connected and quandle_components(K).connected:
        AQ, AK = quandle_aut_group(Q), quandle_aut_group(K)
        elems = [product_map(f, g) for f in AQ for g in AK]
        gens = [product_map(f, AK.identity) for f in (AQ.generators or AQ.elements)]
        gens += [product_map(AQ.identity, g) for g in (AK.generators or AK.elements)]
        return ProductAut(PermGroup(Q.n * K.n, tuple(sorted(elems)), tuple(gens)), True)
    return ProductAut(biquandle_aut_group(product_biquandle(Q, K).biquandle), False)


@dataclass(frozen=True)
class ProductAutDecomposition:
    """Blockwise description of a product automorphism.

    ``f[i]`` is the map on ``Q`` used over the ``i``-th component of ``K``;
    ``g[j]`` is the map on ``K`` used over the ``j``-th component of ``Q``;
    ``rho[(j, i)]`` is the block pair that ``Q_j x K_i`` is sent onto.
    """

    q_blocks: tuple[tuple[int, ...], ...]
    k_blocks: tuple[tuple[int, ...], ...]
    f: tuple[Perm, ...]
    g: tuple[Perm, ...]
    rho: dict[tuple[int, int], tuple[int, int]]


def assemble_product_map(Q: Quandle, K: Quandle, dec: ProductAutDecomposition) -> Perm:
    """``F(x, a) = (f_i(x), g_j(a))`` for ``(x, a)`` in ``Q_j x K_i``."""
    qb = ComponentPartition(dec.q_blocks).block_of()
    kb = ComponentPartition(dec.k_blocks).block_of()
    m = K.n
    return tuple(dec.f[kb[a]][x] * m + dec.g[qb[x]][a] for x in range(Q.n) for a in range(m))


def check_decomposition(Q: Quandle, K: Quandle, dec: ProductAutDecomposition) -> VerificationReport:
    """Check the three blockwise conditions characterizing product automorphisms.

    ``D-injective (i, j)``: ``f_i`` on ``Q_j`` or ``g_j`` on ``K_i`` is not injective.
    ``D-mixed-q (i, r, x, y)`` / ``D-mixed-k (j, l, a, b)``: the mixed homomorphism
    equations fail. ``D-block (j, i)``: the image of ``Q_j x K_i`` is not a block
    product, or ``rho`` is not a bijection of block pairs.
    """
    out = _Collector()
    qs, ks = dec.q_blocks, dec.k_blocks
    k, m = len(qs), len(ks)
    for i in range(m):
        for j in range(k):
            if len({dec.f[i][x] for x in qs[j]}) != len(qs[j]):
                out.add("D-injective", i, j)
            if len({dec.g[j][a] for a in ks[i]}) != len(ks[i]):
                out.add("D-injective", i, j)
    for i, r in cartesian(range(m), repeat=2):
        for x, y in cartesian(range(Q.n), repeat=2):
            if Q.table[dec.f[i][x]][dec.f[r][y]] != dec.f[i][Q.table[x][y]]:
                out.add("D-mixed-q", i, r, x, y)
    for j, l in cartesian(range(k), repeat=2):
        for a, b in cartesian(range(K.n), repeat=2):
            if K.table[dec.g[j][a]][dec.g[l][b]] != dec.g[j][K.table[a][b]]:
                out.add("D-mixed-k", j, l, a, b)
    qset = {frozenset(b): t for t, b in enumerate(qs)}
    kset = {frozenset(b): t for t, b in enumerate(ks)}
    targets = []
    for j in range(k):
        for i in range(m):
            fq = frozenset(dec.f[i][x] for x in qs[j])
            gk = frozenset(dec.g[j][a] for a in ks[i])
            want = dec.rho.get((j, i))
            if fq not in qset or gk not in kset or want != (qset[fq], kset[gk]):
                out.add("D-block", j, i)
            targets.append(want)
    if sorted(t for t in targets if t is not None) != sorted(cartesian(range(k), range(m))):
        out.add("D-block", -1, -1)
    return out.report()


def decompose_product_aut(Q: Quandle, K: Quandle, F: Sequence[int]) -> ProductAutDecomposition:
    """Split an automorphism of the product biquandle into blockwise factor maps."""
    P = product_biquandle(Q, K)
    F = tuple(F)
    if not is_permutation(F, P.n) or not is_biquandle_hom(P.biquandle, P.biquandle, F):
        raise TableError("map is not an automorphism of the product biquandle")
    qs = quandle_components(Q).blocks
    ks = quandle_components(K).blocks
    m = K.n

    f = []
    for kb in ks:
        rows = {tuple(F[x * m + a] // m for x in range(Q.n)) for a in kb}
        if len(rows) != 1:
            raise ConsistencyError("first coordinate varies inside a component of K")
        f.append(rows.pop())
    g = []
    for qb in qs:
        cols = {tuple(F[x * m + a] % m for a in range(m)) for x in qb}
        if len(cols) != 1:
            raise ConsistencyError("second coordinate varies inside a component of Q")
        g.append(cols.pop())

    qwhere = quandle_components(Q).block_of()
    kwhere = quandle_components(K).block_of()
    rho = {}
    for j, qb in enumerate(qs):
        for i, kb in enumerate(ks):
            rho[(j, i)] = (qwhere[f[i][qb[0]]], kwhere[g[j][kb[0]]])
    dec = ProductAutDecomposition(qs, ks, tuple(f), tuple(g), rho)
    report = check_decomposition(Q, K, dec)
    if not report.passed or assemble_product_map(Q, K, dec) != F:
        raise ConsistencyError(f"product automorphism failed to decompose: {report.violations[:3]}")
    return dec


def automorphisms_from_decompositions(Q: Quandle, K: Quandle,
                                      max_order: int = DECOMPOSITION_MAX_ORDER) -> PermGroup:
    """Build every product automorphism from blockwise tuples of factor maps.

    Candidate ``f_i`` and ``g_j`` range over all quandle endomorphisms of the
    factors; tuples passing ``check_decomposition`` are assembled. Refused above
    ``max_order`` elements because the tuple space grows very quickly.
    """
    if Q.n * K.n > max_order:
        raise CapExceeded(f"product order {Q.n * K.n} exceeds max_order={max_order}")
    qs = quandle_components(Q).blocks
    ks = quandle_components(K).blocks
    k, m = len(qs), len(ks)
    endo_q = list(find_homomorphisms([(Q.table, Q.table)], Q.n, Q.n, injective=False))
    endo_k = list(find_homomorphisms([(K.table, K.table)], K.n, K.n, injective=False))
    qwhere = quandle_components(Q).block_of()
    kwhere = quandle_components(K).block_of()
    found = set()
    for fs in cartesian(endo_q, repeat=m):
        for gs in cartesian(endo_k, repeat=k):
            rho = {(j, i): (qwhere[fs[i][qs[j][0]]], kwhere[gs[j][ks[i][0]]])
                   for j in range(k) for i in range(m)}
            dec = ProductAutDecomposition(qs, ks, fs, gs, rho)
            if check_decomposition(Q, K, dec).passed:
                found.add(assemble_product_map(Q, K, dec))
    return PermGroup.from_elements(Q.n * K.n, found)
