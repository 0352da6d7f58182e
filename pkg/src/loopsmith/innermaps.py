"""Translations, inner mappings and permutation-group closure.

Permutations are tuples of length n with images[i-1] the image of
element i.  Composition follows (p o q)(z) = p(q(z)): q acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Perm = tuple


def identity_perm(n) -> Perm:
    return tuple(range(1, n + 1))


def apply_perm(p, x):
    return p[x - 1]


def compose(p, q) -> Perm:
    """p after q."""
    return tuple(p[q[i] - 1] for i in range(len(p)))


def inverse_perm(p) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def perm_from_cycles(n, cycles) -> Perm:
    """Build a permutation of 1..n from disjoint cycles like [(3, 5), (4, 6)]."""
    images = list(range(1, n + 1))
    seen = set()
    for cyc in cycles:
        for a in cyc:
            if not 1 <= a <= n:
                raise ValueError("cycle entry %r out of range 1..%d" % (a, n))
            if a in seen:
                raise ValueError("cycles are not disjoint at %d" % a)
            seen.add(a)
        for i, a in enumerate(cyc):
            images[a - 1] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def cycles_str(p) -> str:
    """Cycle notation with ascending least elements, e.g. "(3,5)(4,6)(7,8)"."""
    n = len(p)
    seen = [False] * (n + 1)
    parts = []
    for start in range(1, n + 1):
        if seen[start] or p[start - 1] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = p[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = p[nxt - 1]
        parts.append("(%s)" % ",".join(map(str, cyc)))
    return "".join(parts) if parts else "()"


# -- translations and inner mappings ----------------------------------


def left_translation(L, a) -> Perm:
    """z -> a*z."""
    L._check(a)
    return L.rows[a - 1]


def right_translation(L, a) -> Perm:
    """z -> z*a."""
    L._check(a)
    return tuple(L.rows[z][a - 1] for z in range(L.order))


def inner_l(L, x, y) -> Perm:
    """z -> (x*y) \\ (x*(y*z)); fixes 1."""
    L._check(x, y)
    rows = L.rows
    xy = rows[x - 1][y - 1]
    return tuple(L.ldiv(xy, rows[x - 1][rows[y - 1][z] - 1]) for z in range(L.order))


def inner_r(L, x, y) -> Perm:
    """z -> ((z*x)*y) / (x*y); fixes 1."""
    L._check(x, y)
    rows = L.rows
    xy = rows[x - 1][y - 1]
    return tuple(L.rdiv(rows[rows[z][x - 1] - 1][y - 1], xy) for z in range(L.order))


def inner_t(L, x) -> Perm:
    """z -> x \\ (z*x); fixes 1."""
    L._check(x)
    rows = L.rows
    return tuple(L.ldiv(x, rows[z][x - 1]) for z in range(L.order))


def is_automorphism(L, p) -> bool:
    """Does the permutation preserve every product?"""
    if len(p) != L.order:
        raise ValueError("permutation degree %d does not match order %d" % (len(p), L.order))
    rows = L.rows
    n = L.order
    for x in range(n):
        rx = rows[x]
        px = p[x]
        for y in range(n):
            if p[rx[y] - 1] != rows[px - 1][p[y] - 1]:
                return False
    return True


def inner_map_witness(L):
    """First inner-mapping generator that is not an automorphism.

    Scans the two-parameter left family, then the right family, then the
    one-parameter conjugation-like family, each in ascending element
    order.  Returns (family, x, y, perm) or None when all generators are
    automorphisms; family is "l", "r" or "t" and y is None for "t".
    """
    n = L.order
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            p = inner_l(L, x, y)
            if not is_automorphism(L, p):
                return ("l", x, y, p)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            p = inner_r(L, x, y)
            if not is_automorphism(L, p):
                return ("r", x, y, p)
    for x in range(1, n + 1):
        p = inner_t(L, x)
        if not is_automorphism(L, p):
            return ("t", x, None, p)
    return None


@lru_cache(maxsize=None)
def is_automorphic(L) -> bool:
    """All inner-mapping generators are automorphisms."""
    return inner_map_witness(L) is None


@lru_cache(maxsize=None)
def is_left_automorphic(L) -> bool:
    """All generators of the two-parameter left family are automorphisms."""
    n = L.order
    return all(
        is_automorphism(L, inner_l(L, x, y))
        for x in range(1, n + 1) for y in range(1, n + 1)
    )


def moufang_l_iff_r_check(L) -> bool:
    """On a Moufang table, each left inner map is an automorphism exactly
    when its right counterpart is; verified generator by generator."""
    if not L.is_moufang():
        raise ValueError("l-iff-r comparison needs a Moufang table")
    n = L.order
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if is_automorphism(L, inner_l(L, x, y)) != is_automorphism(L, inner_r(L, x, y)):
                return False
    return True


# -- permutation group closure ----------------------------------------


@dataclass
class PermGroupHandle:
    generators: tuple
    elements: frozenset | None  # None when the cap was hit
    order: int | None
    capped: bool


def group_closure(generators, cap=1_000_000) -> PermGroupHandle:
    """Breadth-first closure of permutations under composition.

    For finite degrees this closure is automatically closed under
    inverse and contains the identity.  Stops once the element count
    exceeds cap and returns a capped handle with no element set.
    """
    gens = tuple(tuple(g) for g in generators)
    if not gens:
        raise ValueError("need at least one generator")
    if cap < 1:
        raise ValueError("cap must be at least 1")
    degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise ValueError("generators have mixed degrees")
    ident = identity_perm(degree)
    elements = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                c = compose(g, e)
                if c not in elements:
                    elements.add(c)
                    if len(elements) > cap:
                        return PermGroupHandle(gens, None, None, True)
                    nxt.append(c)
        frontier = nxt
    return PermGroupHandle(gens, frozenset(elements), len(elements), False)
