"""Subloops, derived subloops, quotients and related structure.

All functions take a validated LoopTable and work with plain element
sets.  Generated subloops are fixed-point closures under product, left
division and right division; for finite tables product closure alone
would suffice, but all three are closed over so the re-check helper can
stay independent of that fact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InternalCheckError, QuotientError
from .table import LoopTable


@dataclass
class Subloop:
    parent: LoopTable
    elements: tuple  # sorted, always contains 1
    generators: tuple
    is_group: bool
    is_normal: bool | None = None  # filled on demand

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in set(self.elements)

    def as_table(self, name=None):
        """Relabelled copy of this subloop as a loop in its own right.

        Returns (table, old_to_new).  Elements are renamed by sorted
        position, so 1 stays 1.
        """
        return restriction(self.parent, self.elements, name=name)


def is_closed(L, elements) -> bool:
    """Independent re-check: closed under product and both divisions, has 1."""
    s = set(elements)
    if 1 not in s:
        return False
    for a in s:
        for b in s:
            if L.rows[a - 1][b - 1] not in s:
                return False
            if L.ldiv(a, b) not in s or L.rdiv(a, b) not in s:
                return False
    return True


def _close(L, seed):
    rows = L.rows
    elems = {1}
    queue = [1]
    for g in seed:
        if g not in elems:
            elems.add(g)
            queue.append(g)
    members = list(elems)
    while queue:
        a = queue.pop()
        for b in list(members):
            for c in (rows[a - 1][b - 1], rows[b - 1][a - 1],
                      L.ldiv(a, b), L.ldiv(b, a), L.rdiv(a, b), L.rdiv(b, a)):
                if c not in elems:
                    elems.add(c)
                    queue.append(c)
                    members.append(c)
    return elems


def _associative_on(L, elems):
    rows = L.rows
    for a in elems:
        ra = rows[a - 1]
        for b in elems:
            ab = ra[b - 1]
            rb = rows[b - 1]
            for c in elems:
                if rows[ab - 1][c - 1] != ra[rb[c - 1] - 1]:
                    return False
    return True


def _make_subloop(L, elems, generators):
    elements = tuple(sorted(elems))
    if not is_closed(L, elements):
        raise InternalCheckError("computed subloop is not closed: %r" % (elements,))
    return Subloop(L, elements, tuple(sorted(set(generators))), _associative_on(L, elements))


def generate_subloop(L, seed) -> Subloop:
    """Least subloop containing the seed: closure under *, \\ and /."""
    for g in seed:
        L._check(g)
    return _make_subloop(L, _close(L, seed), seed)


def commutator_subloop(L) -> Subloop:
    """Subloop generated by all commutators [x, y]."""
    values = {L.commutator(x, y) for x in L.elements for y in L.elements}
    return _make_subloop(L, _close(L, values), values)


def associator_subloop(L) -> Subloop:
    """Subloop generated by all associators (x, y, z)."""
    values = set()
    for x in L.elements:
        for y in L.elements:
            for z in L.elements:
                values.add(L.associator(x, y, z))
    return _make_subloop(L, _close(L, values), values)


# -- nuclei, commutant, center ----------------------------------------


def nucleus_left(L) -> Subloop:
    """Elements a with (a*x)*y = a*(x*y) for all x, y."""
    rows = L.rows
    n = L.order
    members = [
        a for a in range(1, n + 1)
        if all(rows[rows[a - 1][x - 1] - 1][y - 1] == rows[a - 1][rows[x - 1][y - 1] - 1]
               for x in range(1, n + 1) for y in range(1, n + 1))
    ]
    return _make_subloop(L, set(members), members)


def nucleus_middle(L) -> Subloop:
    """Elements a with (x*a)*y = x*(a*y) for all x, y."""
    rows = L.rows
    n = L.order
    members = [
        a for a in range(1, n + 1)
        if all(rows[rows[x - 1][a - 1] - 1][y - 1] == rows[x - 1][rows[a - 1][y - 1] - 1]
               for x in range(1, n + 1) for y in range(1, n + 1))
    ]
    return _make_subloop(L, set(members), members)


def nucleus_right(L) -> Subloop:
    """Elements a with (x*y)*a = x*(y*a) for all x, y."""
    rows = L.rows
    n = L.order
    members = [
        a for a in range(1, n + 1)
        if all(rows[rows[x - 1][y - 1] - 1][a - 1] == rows[x - 1][rows[y - 1][a - 1] - 1]
               for x in range(1, n + 1) for y in range(1, n + 1))
    ]
    return _make_subloop(L, set(members), members)


def nucleus(L) -> Subloop:
    """Intersection of the three one-sided nuclei."""
    members = set(nucleus_left(L).elements) & set(nucleus_middle(L).elements) \
        & set(nucleus_right(L).elements)
    return _make_subloop(L, members, members)


class Commutant(NamedTuple):
    elements: frozenset
    closed: bool  # the set need not be a subloop in general


def commutant(L) -> Commutant:
    """Elements commuting with everything; returned with a closure flag."""
    rows = L.rows
    n = L.order
    members = frozenset(
        a for a in range(1, n + 1)
        if all(rows[a - 1][x - 1] == rows[x - 1][a - 1] for x in range(1, n + 1))
    )
    return Commutant(members, is_closed(L, members))


def center(L) -> Subloop:
    """Commutant intersected with the nucleus; always a subloop."""
    members = commutant(L).elements & set(nucleus(L).elements)
    return _make_subloop(L, members, members)


# -- normality and quotients ------------------------------------------


def is_normal(L, H) -> bool:
    """Invariance of H under the standard inner-mapping generators.

    Checks the maps z -> (x*y) \\ (x*(y*z)), z -> ((z*x)*y) / (x*y) and
    z -> x \\ (z*x) pointwise on H for all x, y.
    """
    rows = L.rows
    hset = set(H.elements)
    n = L.order
    for x in range(1, n + 1):
        rx = rows[x - 1]
        for h in hset:
            if L.ldiv(x, rows[h - 1][x - 1]) not in hset:
                H.is_normal = False
                return False
        for y in range(1, n + 1):
            xy = rx[y - 1]
            ry = rows[y - 1]
            for h in hset:
                if L.ldiv(xy, rx[ry[h - 1] - 1]) not in hset:
                    H.is_normal = False
                    return False
                if L.rdiv(rows[rows[h - 1][x - 1] - 1][y - 1], xy) not in hset:
                    H.is_normal = False
                    return False
    H.is_normal = True
    return True


class Quotient(NamedTuple):
    table: LoopTable
    projection: tuple  # projection[x-1] = coset index of x


def quotient(L, H) -> Quotient:
    """Factor table on the cosets x*H, with cosets named by least member.

    Raises QuotientError when the cosets fail to partition the loop or
    when coset products depend on the chosen representatives; both
    signal that H is not normal.  The projection is re-verified to be a
    homomorphism before returning.
    """
    rows = L.rows
    n = L.order
    hset = sorted(set(H.elements))
    coset_of = [0] * (n + 1)
    reps = []
    for x in range(1, n + 1):
        if coset_of[x]:
            continue
        block = sorted(rows[x - 1][h - 1] for h in hset)
        if x not in block:
            raise QuotientError("coset of %d does not contain it: %r" % (x, block))
        for y in block:
            if coset_of[y]:
                raise QuotientError(
                    "cosets overlap: %d lies in the blocks of %d and %d" % (y, coset_of[y], x)
                )
        reps.append(block[0])
        for y in block:
            coset_of[y] = block[0]
    reps.sort()
    index = {r: i + 1 for i, r in enumerate(reps)}
    m = len(reps)
    qrows = [[0] * m for _ in range(m)]
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            qrows[i][j] = index[coset_of[rows[a - 1][b - 1]]]
    # representative independence
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            ra, rb = coset_of[a], coset_of[b]
            if coset_of[rows[a - 1][b - 1]] != coset_of[rows[ra - 1][rb - 1]]:
                raise QuotientError(
                    "coset product ill defined: (%d,%d) vs representatives (%d,%d)"
                    % (a, b, ra, rb)
                )
    name = None
    if L.name:
        name = "%s/%s" % (L.name, "{%s}" % ",".join(map(str, hset)))
    qtable = LoopTable(qrows, name=name)
    projection = tuple(index[coset_of[x]] for x in range(1, n + 1))
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if projection[rows[a - 1][b - 1] - 1] != qtable.rows[projection[a - 1] - 1][projection[b - 1] - 1]:
                raise InternalCheckError("quotient projection is not a homomorphism")
    return Quotient(qtable, projection)


def restriction(L, elements, name=None):
    """Relabel a closed element set as a standalone LoopTable.

    Returns (table, old_to_new).  Raises InternalCheckError when the set
    is not closed.
    """
    elems = tuple(sorted(set(elements)))
    if not is_closed(L, elems):
        raise InternalCheckError("restriction to a non-closed set: %r" % (elems,))
    old_to_new = {e: i + 1 for i, e in enumerate(elems)}
    rows = [[old_to_new[L.rows[a - 1][b - 1]] for b in elems] for a in elems]
    return LoopTable(rows, name=name), old_to_new


# -- Sylow-style searches ---------------------------------------------


@dataclass
class SylowResult:
    subloop: Subloop | None  # present only when an exact p-part subloop was found
    best: Subloop            # largest p-power-order subloop encountered
    target: int              # exact p-part of the loop order
    capped: bool = False

    @property
    def exact(self) -> bool:
        return self.subloop is not None


def _p_part(n, p):
    t = 1
    while n % p == 0:
        n //= p
        t *= p
    return t


def sylow_subloop(L, p, seed_cap=100_000) -> SylowResult:
    """Search for a subloop whose order is the exact p-part of |L|.

    First closes the set of all elements of p-power left order; when
    that misses, falls back to closures of up to three such elements,
    stopping after seed_cap candidate closures.
    """
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError("p must be prime, got %r" % (p,))
    n = L.order
    target = _p_part(n, p)
    trivial = generate_subloop(L, ())
    if target == 1:
        return SylowResult(trivial, trivial, target)
    pelems = []
    for x in L.elements:
        k = L.element_order(x).order
        if k >= 1:
            while k % p == 0:
                k //= p
            if k == 1:
                pelems.append(x)
    best = trivial

    def p_power(m):
        while m % p == 0:
            m //= p
        return m == 1

    full = generate_subloop(L, pelems)
    if len(full) == target:
        return SylowResult(full, full, target)
    if p_power(len(full)) and len(full) > len(best):
        best = full
    tried = 0
    capped = False
    from itertools import combinations

    for size in (1, 2, 3):
        for seed in combinations(pelems, size):
            tried += 1
            if tried > seed_cap:
                capped = True
                break
            H = generate_subloop(L, seed)
            if len(H) == target:
                return SylowResult(H, H, target, capped)
            if p_power(len(H)) and len(H) > len(best):
                best = H
        if capped:
            break
    return SylowResult(None, best, target, capped)


@dataclass
class HallResult:
    subloop: Subloop | None  # closure when its order matches the 3'-part of |L|
    target: int
    in_nucleus: bool
    is_group: bool


def hall_3prime_subgroup(L) -> HallResult:
    """Closure of all elements of left order coprime to 3.

    The closure is returned when its order equals the 3'-part of the
    loop order.  Containment in the nucleus and associativity are
    reported as diagnostics rather than required: they hold in the
    well-behaved cases but fail for some tables that still carry an
    exact 3'-part subloop.
    """
    n = L.order
    target = n
    while target % 3 == 0:
        target //= 3
    members = [x for x in L.elements if L.element_order(x).order % 3 != 0 and L.element_order(x).order >= 1]
    H = generate_subloop(L, members)
    in_nuc = set(H.elements) <= set(nucleus(L).elements)
    if len(H) == target:
        return HallResult(H, target, in_nuc, H.is_group)
    return HallResult(None, target, in_nuc, H.is_group)


def is_direct_product(L, A, B) -> bool:
    """Internal direct product test for two subloops.

    Requires trivial intersection, unique factorization a*b across the
    loop, componentwise products ((a1*b1)*(a2*b2) = (a1*a2)*(b1*b2),
    which also forces the two factors to commute elementwise), and
    normality of both factors.
    """
    aset, bset = set(A.elements), set(B.elements)
    if aset & bset != {1}:
        return False
    if len(aset) * len(bset) != L.order:
        return False
    rows = L.rows
    products = {rows[a - 1][b - 1] for a in aset for b in bset}
    if len(products) != L.order:
        return False
    for a1 in aset:
        for b1 in bset:
            left = rows[a1 - 1][b1 - 1]
            for a2 in aset:
                a12 = rows[a1 - 1][a2 - 1]
                for b2 in bset:
                    if rows[left - 1][rows[a2 - 1][b2 - 1] - 1] != rows[a12 - 1][rows[b1 - 1][b2 - 1] - 1]:
                        return False
    return is_normal(L, A) and is_normal(L, B)


def commutative_nilpotency_class(L, max_rounds=None) -> int | None:
    """Least k such that all left-normed commutator words of k+1 letters vanish.

    V_1 collects the commutators [x, y]; V_{k+1} collects [v, q] for v in
    V_k and q anywhere in the loop.  Returns the least k with V_k = {1}
    (so 1 for any commutative loop) or None when the sets stop changing
    without reaching {1}.
    """
    n = L.order
    current = {L.commutator(x, y) for x in range(1, n + 1) for y in range(1, n + 1)}
    seen = set()
    k = 1
    while True:
        if current == {1}:
            return k
        key = frozenset(current)
        if key in seen:
            return None
        seen.add(key)
        if max_rounds is not None and k >= max_rounds:
            return None
        current = {L.commutator(v, q) for v in current for q in range(1, n + 1)}
        k += 1
