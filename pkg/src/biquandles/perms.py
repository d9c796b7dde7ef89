"""Permutations of ``0..n-1`` in image notation.

A permutation ``p`` is a tuple with ``p[i]`` the image of ``i``. Composition
follows function notation: ``compose(f, g)(x) == f(g(x))``.
"""
from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(p: Sequence[int], n: int | None = None) -> bool:
    if n is None:
        n = len(p)
    return len(p) == n and sorted(p) == list(range(n))


def compose(f: Sequence[int], g: Sequence[int]) -> Perm:
    """Return ``f o g`` (apply ``g`` first)."""
    return tuple(f[x] for x in g)


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def conjugate(h: Sequence[int], g: Sequence[int]) -> Perm:
    """Return ``h g h^-1``."""
    return compose(compose(h, g), inverse(h))


def cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def order(p: Sequence[int]) -> int:
    return lcm(*(len(c) for c in cycles(p))) if len(p) else 1


def from_cycles(n: int, cycs: Iterable[Sequence[int]]) -> Perm:
    """Build a permutation of degree ``n`` from disjoint cycles."""
    img = list(range(n))
    for c in cycs:
        for a, b in zip(c, list(c[1:]) + [c[0]]):
            img[a] = b
    return tuple(img)


def format_perm(p: Sequence[int]) -> str:
    return " ".join(map(str, p))
