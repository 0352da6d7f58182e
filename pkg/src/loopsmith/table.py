"""Finite loops given by their Cayley tables.

A loop of order n lives on the elements 1..n and element 1 is the
two-sided identity.  ``rows[x-1][y-1]`` holds the product x*y.  Left and
right division are read off the rows and columns once at construction
time, so all later queries are table lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import TableValidationError


class ElementOrder(NamedTuple):
    order: int
    ambiguous: bool  # right powers reach 1 after a different number of steps


class MoufangFlags(NamedTuple):
    """One flag per Moufang identity, checked independently."""

    left: bool    # ((x*y)*x)*z == x*(y*(x*z))
    right: bool   # ((x*y)*z)*y == x*(y*(z*y))
    middle: bool  # (x*y)*(z*x) == (x*(y*z))*x

    @property
    def holds(self) -> bool:
        return self.left and self.right and self.middle


@dataclass
class ValidationReport:
    """Outcome of checking a raw table; clean iff violations is empty."""

    is_quasigroup: bool
    has_identity: bool
    identity_index: int | None
    violations: list

    @property
    def is_loop(self) -> bool:
        return self.is_quasigroup and self.has_identity


def validate(raw) -> ValidationReport:
    """Check a raw square of ints for the quasigroup and identity laws.

    Violations are (kind, witness) pairs.  Kinds: "empty", "not-square",
    "bad-entry" with (row, column, value), "row-not-latin" with
    (row, col1, col2) naming two equal cells, "column-not-latin" with
    (column, row1, row2), and "no-identity".
    """
    n = len(raw)
    if n == 0:
        return ValidationReport(False, False, None, [("empty", ())])
    violations = []
    square = True
    for i, row in enumerate(raw, start=1):
        if len(row) != n:
            violations.append(("not-square", (i, len(row))))
            square = False
    if not square:
        return ValidationReport(False, False, None, violations)
    entries_ok = True
    for x, row in enumerate(raw, start=1):
        for y, v in enumerate(row, start=1):
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                violations.append(("bad-entry", (x, y, v)))
                entries_ok = False
    if not entries_ok:
        return ValidationReport(False, False, None, violations)
    is_quasigroup = True
    for x, row in enumerate(raw, start=1):
        seen = {}
        for y, v in enumerate(row, start=1):
            if v in seen:
                violations.append(("row-not-latin", (x, seen[v], y)))
                is_quasigroup = False
            else:
                seen[v] = y
    for y in range(1, n + 1):
        seen = {}
        for x in range(1, n + 1):
            v = raw[x - 1][y - 1]
            if v in seen:
                violations.append(("column-not-latin", (y, seen[v], x)))
                is_quasigroup = False
            else:
                seen[v] = x
    identity = None
    target = list(range(1, n + 1))
    for e in range(1, n + 1):
        if list(raw[e - 1]) == target and [raw[x - 1][e - 1] for x in range(1, n + 1)] == target:
            identity = e
            break
    if identity is None:
        violations.append(("no-identity", ()))
    return ValidationReport(is_quasigroup, identity is not None, identity, violations)


def relabel(raw, perm):
    """Rewrite a table under the renaming x -> perm[x-1]."""
    n = len(raw)
    out = [[0] * n for _ in range(n)]
    for x in range(1, n + 1):
        px = perm[x - 1]
        for y in range(1, n + 1):
            out[px - 1][perm[y - 1] - 1] = perm[raw[x - 1][y - 1] - 1]
    return out


def _swap_labels(n, a, b):
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = b, a
    return tuple(images)


class LoopTable:
    """Immutable, validated multiplication table of a finite loop.

    Construction runs full validation and raises TableValidationError on
    any defect.  When the two-sided identity of a clean table is not
    element 1, pass normalize=True to relabel by the transposition that
    moves it there; otherwise construction is refused.
    """

    def __init__(self, rows, name=None, normalize=False):
        report = validate(rows)
        if not report.is_loop:
            raise TableValidationError(report)
        if report.identity_index != 1:
            if not normalize:
                raise TableValidationError(
                    report,
                    "identity is element %d, not 1 (normalize to relabel)" % report.identity_index,
                )
            rows = relabel(rows, _swap_labels(len(rows), 1, report.identity_index))
        self.order = len(rows)
        self.rows = tuple(tuple(r) for r in rows)
        self.name = name
        n = self.order
        ld = [[0] * n for _ in range(n)]
        rd = [[0] * n for _ in range(n)]
        for x in range(n):
            row = self.rows[x]
            for y in range(n):
                v = row[y]
                ld[x][v - 1] = y + 1   # x \ v
                rd[y][v - 1] = x + 1   # v / (y+1)
        self._ld = tuple(tuple(r) for r in ld)
        self._rd = tuple(tuple(r) for r in rd)
        self._memo = {}

    # -- basic protocol ------------------------------------------------

    def __repr__(self):
        label = self.name or "loop"
        return "LoopTable(%s, order=%d)" % (label, self.order)

    def __eq__(self, other):
        return isinstance(other, LoopTable) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    @property
    def elements(self):
        return range(1, self.order + 1)

    def _check(self, *xs):
        for x in xs:
            if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= self.order:
                raise ValueError("element %r out of range 1..%d" % (x, self.order))

    # -- products and divisions ----------------------------------------

    def mul(self, x, y):
        """x*y."""
        self._check(x, y)
        return self.rows[x - 1][y - 1]

    def ldiv(self, x, y):
        """x \\ y, the unique z with x*z = y."""
        self._check(x, y)
        return self._ld[x - 1][y - 1]

    def rdiv(self, y, x):
        """y / x, the unique z with z*x = y."""
        self._check(x, y)
        return self._rd[x - 1][y - 1]

    def left_inverse(self, x):
        """The unique a with a*x = 1."""
        self._check(x)
        return self._rd[x - 1][0]

    def right_inverse(self, x):
        """The unique b with x*b = 1."""
        self._check(x)
        return self._ld[x - 1][0]

    def element_order(self, x) -> ElementOrder:
        """Least k with the k-th left power of x equal to 1.

        Left powers stack products on the left: x^(k+1) = x * x^(k).
        The flag is set when right powers first reach 1 at a different k.
        A power sequence that never reaches 1 cannot occur for a valid
        table, but is reported as order 0 with the flag set.
        """
        self._check(x)
        row = self.rows[x - 1]
        k_left = 0
        p = x
        for k in range(1, self.order + 1):
            if p == 1:
                k_left = k
                break
            p = row[p - 1]
        k_right = 0
        q = x
        for k in range(1, self.order + 1):
            if q == 1:
                k_right = k
                break
            q = self.rows[q - 1][x - 1]
        if k_left == 0:
            return ElementOrder(0, True)
        return ElementOrder(k_left, k_left != k_right)

    # -- words ---------------------------------------------------------

    def commutator(self, x, y):
        """[x, y] = ((x' * y') * x) * y with x' the right inverse of x.

        Left-normed bracketing throughout.  On Moufang tables the value
        is 1 exactly when x and y commute; on rough tables the word can
        disagree with a direct product comparison, so test commutativity
        with mul when that is what you mean.
        """
        self._check(x, y)
        rows = self.rows
        xi = self._ld[x - 1][0]
        yi = self._ld[y - 1][0]
        return rows[rows[rows[xi - 1][yi - 1] - 1][x - 1] - 1][y - 1]

    def associator(self, x, y, z):
        """(x, y, z) = (x*(y*z)) \\ ((x*y)*z); equals 1 iff the triple associates."""
        self._check(x, y, z)
        rows = self.rows
        lhs = rows[x - 1][rows[y - 1][z - 1] - 1]
        rhs = rows[rows[x - 1][y - 1] - 1][z - 1]
        return self._ld[lhs - 1][rhs - 1]

    # -- global properties ---------------------------------------------

    def is_commutative(self) -> bool:
        if "commutative" not in self._memo:
            rows = self.rows
            n = self.order
            self._memo["commutative"] = all(
                rows[x][y] == rows[y][x] for x in range(n) for y in range(x + 1, n)
            )
        return self._memo["commutative"]

    def is_associative(self) -> bool:
        if "associative" not in self._memo:
            rows = self.rows
            n = self.order
            result = True
            for x in range(n):
                rx = rows[x]
                for y in range(n):
                    xy = rx[y] - 1
                    ry = rows[y]
                    if any(rows[xy][z] != rx[ry[z] - 1] for z in range(n)):
                        result = False
                        break
                if not result:
                    break
            self._memo["associative"] = result
        return self._memo["associative"]

    def moufang_report(self) -> MoufangFlags:
        """Evaluate the three Moufang identities separately."""
        if "moufang" not in self._memo:
            rows = self.rows
            n = self.order
            rng = range(n)

            def left_ok():
                for x in rng:
                    rx = rows[x]
                    for y in rng:
                        a = rows[rx[y] - 1][x] - 1   # (x*y)*x
                        ry = rows[y]
                        for z in rng:
                            if rows[a][z] != rx[ry[rx[z] - 1] - 1]:
                                return False
                return True

            def right_ok():
                for x in rng:
                    rx = rows[x]
                    for y in rng:
                        xy = rx[y] - 1
                        ry = rows[y]
                        for z in rng:
                            if rows[rows[xy][z] - 1][y] != rx[ry[rows[z][y] - 1] - 1]:
                                return False
                return True

            def middle_ok():
                for x in rng:
                    rx = rows[x]
                    for y in rng:
                        xy = rx[y] - 1
                        ry = rows[y]
                        for z in rng:
                            if rows[xy][rows[z][x] - 1] != rows[rx[ry[z] - 1] - 1][x]:
                                return False
                return True

            self._memo["moufang"] = MoufangFlags(left_ok(), right_ok(), middle_ok())
        return self._memo["moufang"]

    def is_moufang(self) -> bool:
        return self.moufang_report().holds

    def is_diassociative(self) -> bool:
        """True when every subloop generated by two elements is a group."""
        if "diassociative" not in self._memo:
            from .subloops import generate_subloop

            result = True
            for x in range(1, self.order + 1):
                for y in range(x, self.order + 1):
                    if not generate_subloop(self, (x, y)).is_group:
                        result = False
                        break
                if not result:
                    break
            self._memo["diassociative"] = result
        return self._memo["diassociative"]
