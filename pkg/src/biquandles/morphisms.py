"""Homomorphisms, automorphism groups and the permutation-group toolkit.

Automorphism and isomorphism searches share one backtracking engine
(``find_homomorphisms``): it assigns images element by element and
propagates every forced value ``F(x op y) = F(x) op F(y)`` before branching.
The naive ``n!`` enumeration is kept as an independent oracle.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations, product
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import AxiomError, CapExceeded, TableError
from .perms import Perm, compose, conjugate, identity, inverse, is_permutation, order
from .structures import BiquandleStructure, underlying_quandle
from .tables import Biquandle, Quandle, Table, VerificationReport, _Collector

NAIVE_MAX_DEGREE = 8

TablePair = tuple[Table, Table]


# -- search engine -----------------------------------------------------------

def _propagate(img, used, assigned, x, v, pairs, injective) -> bool:
    stack = [(x, v)]
    while stack:
        x, v = stack.pop()
        cur = img[x]
        if cur != -1:
            if cur != v:
                return False
            continue
        if injective and used[v]:
            return False
        img[x] = v
        used[v] = True
        assigned.append(x)
        for y in assigned:
            for S, T in pairs:
                stack.append((S[x][y], T[v][img[y]]))
                stack.append((S[y][x], T[img[y]][v]))
    return True


def find_homomorphisms(pairs: Sequence[TablePair], n_src: int, n_dst: int,
                       injective: bool = True) -> Iterator[Perm]:
    """Yield every map ``F`` with ``F(S[x][y]) == T[F(x)][F(y)]`` for all ``(S, T)``.

    Maps are yielded in lexicographic order. With ``injective=True`` only
    injective maps are produced (bijections when the sizes agree).
    """
    if injective and n_src > n_dst:
        return

    def search(img, used, assigned):
        try:
            x = img.index(-1)
        except ValueError:
            yield tuple(img)
            return
        for v in range(n_dst):
            if injective and used[v]:
                continue
            img2, used2, assigned2 = img[:], used[:], assigned[:]
            if _propagate(img2, used2, assigned2, x, v, pairs, injective):
                yield from search(img2, used2, assigned2)

    yield from search([-1] * n_src, [False] * n_dst, [])


def _naive_maps(n_src: int, n_dst: int, injective: bool) -> Iterable[Perm]:
    if max(n_src, n_dst) > NAIVE_MAX_DEGREE:
        raise CapExceeded(f"naive enumeration refused above degree {NAIVE_MAX_DEGREE}")
    if injective:
        return permutations(range(n_dst), n_src)
    return product(range(n_dst), repeat=n_src)


def _preserves(F: Sequence[int], S: Table, T: Table) -> bool:
    n = len(S)
    return all(F[S[x][y]] == T[F[x]][F[y]] for x in range(n) for y in range(n))


def _check_map(F: Sequence[int], n_src: int, n_dst: int) -> None:
    if len(F) != n_src or any(not 0 <= v < n_dst for v in F):
        raise TableError(f"map must send 0..{n_src - 1} into 0..{n_dst - 1}: {tuple(F)}")


def is_quandle_hom(Q1: Quandle, Q2: Quandle, F: Sequence[int]) -> bool:
    _check_map(F, Q1.n, Q2.n)
    return _preserves(F, Q1.table, Q2.table)


def is_biquandle_hom(B1: Biquandle, B2: Biquandle, F: Sequence[int]) -> bool:
    _check_map(F, B1.n, B2.n)
    return _preserves(F, B1.under, B2.under) and _preserves(F, B1.over, B2.over)


def quandle_homomorphisms(Q1: Quandle, Q2: Quandle, injective: bool = False) -> list[Perm]:
    return list(find_homomorphisms([(Q1.table, Q2.table)], Q1.n, Q2.n, injective))


def biquandle_homomorphisms(B1: Biquandle, B2: Biquandle, injective: bool = False) -> list[Perm]:
    pairs = [(B1.under, B2.under), (B1.over, B2.over)]
    return list(find_homomorphisms(pairs, B1.n, B2.n, injective))


# -- permutation groups ------------------------------------------------------

@dataclass(frozen=True)
class PermGroup:
    """A finite permutation group held as a sorted tuple of all its elements."""

    degree: int
    elements: tuple[Perm, ...]
    generators: tuple[Perm, ...] | None = field(default=None, compare=False)

    @classmethod
    def from_generators(cls, degree: int, gens: Iterable[Sequence[int]]) -> "PermGroup":
        gens = tuple(dict.fromkeys(tuple(g) for g in gens))
        for g in gens:
            if not is_permutation(g, degree):
                raise TableError(f"not a permutation of degree {degree}: {g}")
        e = identity(degree)
        seen = {e}
        queue = deque([e])
        while queue:
            h = queue.popleft()
            for g in gens:
                hg = compose(h, g)
                if hg not in seen:
                    seen.add(hg)
                    queue.append(hg)
        return cls(degree, tuple(sorted(seen)), gens)

    @classmethod
    def from_elements(cls, degree: int, elems: Iterable[Sequence[int]], check: bool = True) -> "PermGroup":
        G = cls(degree, tuple(sorted(set(tuple(p) for p in elems))))
        if check:
            report = G.verify()
            if not report.passed:
                raise AxiomError(f"not a permutation group: {report.violations[:3]}", report)
        return G

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def element_set(self) -> frozenset[Perm]:
        # cached on first use; frozen dataclass so bypass __setattr__
        try:
            return self.__dict__["_set"]
        except KeyError:
            s = frozenset(self.elements)
            object.__setattr__(self, "_set", s)
            return s

    def is_abelian(self) -> bool:
        gens = self.generators or self.elements
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)

    def verify(self) -> VerificationReport:
        """Closure, identity membership, inverses, and generation (when recorded)."""
        out = _Collector()
        elems = self.element_set
        index = {p: i for i, p in enumerate(self.elements)}
        if self.identity not in elems:
            out.add("identity")
        for i, a in enumerate(self.elements):
            if not is_permutation(a, self.degree):
                out.add("degree", i)
            if inverse(a) not in elems:
                out.add("inverse", i)
            for j, b in enumerate(self.elements):
                if compose(a, b) not in elems:
                    out.add("closure", i, j)
        if self.generators is not None:
            spanned = PermGroup.from_generators(self.degree, self.generators)
            if spanned.element_set != elems:
                out.add("generators", *(index.get(g, -1) for g in self.generators))
        return out.report()

    def subgroup(self, predicate) -> "PermGroup":
        return PermGroup(self.degree, tuple(g for g in self.elements if predicate(g)))


@dataclass(frozen=True)
class IsoResult:
    found: bool
    witness: Perm | None = None

    def __bool__(self) -> bool:
        return self.found


# -- automorphism groups -----------------------------------------------------

def _bijections(pairs, n, oracle):
    if oracle:
        return [p for p in _naive_maps(n, n, True) if all(_preserves(p, S, T) for S, T in pairs)]
    return list(find_homomorphisms(pairs, n, n, injective=True))


def quandle_aut_group(Q: Quandle, oracle: bool = False) -> PermGroup:
    """All bijections of ``Q`` preserving ``*``.

    ``oracle=True`` tests every one of the ``n!`` bijections instead of
    running the propagating search.
    """
    return PermGroup.from_elements(Q.n, _bijections([(Q.table, Q.table)], Q.n, oracle))


def biquandle_aut_group(B: Biquandle, oracle: bool = False) -> PermGroup:
    """Automorphisms of ``B``.

    By default these are the automorphisms ``F`` of the underlying quandle with
    ``F o beta_y == beta_{F(y)} o F`` for every ``y``. ``oracle=True`` instead
    tests every bijection against both operations directly.
    """
    if oracle:
        pairs = [(B.under, B.under), (B.over, B.over)]
        return PermGroup.from_elements(B.n, _bijections(pairs, B.n, True))
    betas = [B.beta(y) for y in range(B.n)]
    aut_q = quandle_aut_group(underlying_quandle(B))
    keep = [F for F in aut_q if _intertwines(F, betas, betas)]
    return PermGroup.from_elements(B.n, keep)


def _intertwines(F: Perm, betas1, betas2) -> bool:
    return all(compose(F, b) == compose(betas2[F[y]], F) for y, b in enumerate(betas1))


def inner_group(Q: Quandle) -> PermGroup:
    """The group generated by the symmetries ``S_y: x -> x * y``."""
    return PermGroup.from_generators(Q.n, [Q.symmetry(y) for y in range(Q.n)])


# -- isomorphism -------------------------------------------------------------

def quandle_isomorphism(Q1: Quandle, Q2: Quandle) -> IsoResult:
    if Q1.n != Q2.n:
        return IsoResult(False)
    F = next(find_homomorphisms([(Q1.table, Q2.table)], Q1.n, Q2.n), None)
    return IsoResult(F is not None, F)


def biquandle_isomorphism(B1: Biquandle, B2: Biquandle, oracle: bool = False) -> IsoResult:
    """Search for a biquandle isomorphism ``B1 -> B2`` directly on both tables."""
    if B1.n != B2.n:
        return IsoResult(False)
    pairs = [(B1.under, B2.under), (B1.over, B2.over)]
    if oracle:
        F = next((p for p in _naive_maps(B1.n, B2.n, True)
                  if all(_preserves(p, S, T) for S, T in pairs)), None)
    else:
        F = next(find_homomorphisms(pairs, B1.n, B2.n), None)
    return IsoResult(F is not None, F)


def structures_isomorphic(S1: BiquandleStructure, S2: BiquandleStructure) -> IsoResult:
    """Find a quandle isomorphism ``F`` of the bases with ``F b1_y = b2_{F(y)} F``.

    Returns the lexicographically smallest such ``F``.
    """
    if S1.n != S2.n:
        return IsoResult(False)
    for F in find_homomorphisms([(S1.base.table, S2.base.table)], S1.n, S2.n):
        if _intertwines(F, S1.betas, S2.betas):
            return IsoResult(True, F)
    return IsoResult(False)


def groups_isomorphic(G1: PermGroup, G2: PermGroup) -> IsoResult:
    """Decide isomorphism of two permutation groups by backtracking over generator images.

    The witness lists, for each element of ``G1`` in order, the index of its
    image in ``G2.elements``.
    """
    if G1.order != G2.order:
        return IsoResult(False)
    orders1 = {g: order(g) for g in G1}
    orders2 = {g: order(g) for g in G2}
    if sorted(orders1.values()) != sorted(orders2.values()):
        return IsoResult(False)

    # greedy generating set, larger element orders first
    gens: list[Perm] = []
    span = {G1.identity}
    for g in sorted(G1.elements, key=lambda p: (-orders1[p], p)):
        if g not in span:
            gens.append(g)
            span = set(PermGroup.from_generators(G1.degree, gens).elements)
        if len(span) == G1.order:
            break

    e2 = G2.identity

    def extend(k, images):
        """BFS over the subgroup spanned by the first ``k`` generators."""
        phi = {G1.identity: e2}
        queue = deque([G1.identity])
        while queue:
            h = queue.popleft()
            for g, gi in zip(gens[:k], images):
                hg, val = compose(h, g), compose(phi[h], gi)
                if hg in phi:
                    if phi[hg] != val:
                        return None
                else:
                    phi[hg] = val
                    queue.append(hg)
        if len(set(phi.values())) != len(phi):
            return None
        return phi

    candidates = [[h for h in G2.elements if orders2[h] == orders1[g]] for g in gens]

    def search(images):
        k = len(images)
        phi = extend(k, images)
        if phi is None:
            return None
        if k == len(gens):
            return phi
        for h in candidates[k]:
            found = search(images + [h])
            if found is not None:
                return found
        return None

    phi = search([])
    if phi is None:
        return IsoResult(False)
    index2 = {p: i for i, p in enumerate(G2.elements)}
    return IsoResult(True, tuple(index2[phi[g]] for g in G1.elements))


# -- group-theoretic services ------------------------------------------------

def conjugacy_classes(G: PermGroup) -> list[tuple[Perm, ...]]:
    """Partition ``G`` into conjugacy classes, each sorted, ordered by least member."""
    remaining = set(G.elements)
    classes = []
    for g in G.elements:
        if g not in remaining:
            continue
        cls = {conjugate(h, g) for h in G.elements}
        remaining -= cls
        classes.append(tuple(sorted(cls)))
    return classes


def centralizer(G: PermGroup, f: Sequence[int]) -> PermGroup:
    f = tuple(f)
    if f not in G:
        raise TableError(f"{f} is not an element of the group")
    return G.subgroup(lambda g: compose(g, f) == compose(f, g))


def setwise_normalizer(G: PermGroup, S: Iterable[Sequence[int]]) -> PermGroup:
    """Elements ``g`` with ``g S g^-1 == S`` for the set ``S``."""
    S = frozenset(tuple(s) for s in S)
    if not S <= G.element_set:
        raise TableError("normalized set must lie inside the group")
    return G.subgroup(lambda g: frozenset(conjugate(g, s) for s in S) == S)


def classify_constant_structures(Q: Quandle) -> list[tuple[Perm, int]]:
    """One ``(representative, class size)`` per conjugacy class of ``Aut(Q)``.

    Constant structures built from representatives of distinct classes give
    pairwise non-isomorphic biquandles, and every constant structure is
    isomorphic to one of them.
    """
    return [(cls[0], len(cls)) for cls in conjugacy_classes(quandle_aut_group(Q))]


# -- affine maps and dihedral biquandles -------------------------------------

def affine_map(a: int, b: int, n: int) -> Perm:
    """``i -> a i + b (mod n)``."""
    return tuple((a * i + b) % n for i in range(n))


def affine_group(n: int) -> PermGroup:
    """All maps ``i -> a i + b`` on ``Z_n`` with ``a`` a unit; order ``n * phi(n)``."""
    if n < 1:
        raise TableError(f"order must be positive, got {n}")
    units = [a for a in range(n) if gcd(a, n) == 1]
    elems = {affine_map(a, b, n) for a in units for b in range(n)}
    gens = [affine_map(a, 0, n) for a in units] + [affine_map(1, 1, n)]
    return PermGroup(n, tuple(sorted(elems)), tuple(dict.fromkeys(gens)))


def dihedral_biquandle_aut(n: int, s: int) -> PermGroup:
    """Automorphisms of the dihedral biquandle as the centralizer of ``i -> s i`` in the affine group.

    Only valid when both ``s`` and ``s + 1`` are units mod ``n``; otherwise use
    ``biquandle_aut_group`` on ``dihedral_biquandle(n, s)``.
    """
    if gcd(s % n, n) != 1:
        raise TableError(f"s={s} is not a unit modulo {n}")
    if gcd((s + 1) % n, n) != 1:
        raise TableError(
            f"s+1={(s + 1) % n} is not a unit modulo {n}; no closed form, "
            "use biquandle_aut_group(dihedral_biquandle(n, s))")
    return centralizer(affine_group(n), affine_map(s, 0, n))

