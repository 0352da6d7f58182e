"""Executable property suites over collections of loops.

Each suite quantifies one proved statement over every input satisfying
its hypothesis and reports: how many hypothesis instances it saw, how
many individual checks ran, and any violations.  Suites never assert;
callers decide what a violation or an empty hypothesis class means.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import subloops as sl
from .halfmorph import (
    HalfKind,
    classify,
    enumerate_half_automorphisms,
    half_maps_form_group_check,
    induced_on_quotient,
    is_semi_isomorphism,
    make_half_map,
    verify_main_theorem,
)
from .innermaps import is_automorphic, is_left_automorphic


@dataclass
class SuiteResult:
    name: str
    hypothesis_count: int = 0
    check_count: int = 0
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        text = "suite %-28s hypotheses=%-5d checks=%-8d violations=%d %s" % (
            self.name, self.hypothesis_count, self.check_count, len(self.violations), status
        )
        if self.notes:
            text += "  [%s]" % "; ".join(self.notes)
        return text


def _enum(name, table, enums, max_order=None, skipped=None):
    if enums is not None and name in enums:
        return enums[name]
    if max_order is not None and table.order > max_order:
        if skipped is not None:
            skipped.append(name)
        return None
    result = enumerate_half_automorphisms(table)
    if enums is not None:
        enums[name] = result
    return result


# -- structural suites (no enumeration needed) ------------------------


def suite_moufang_flag_agreement(inputs) -> SuiteResult:
    """The three Moufang identities hold or fail together on every table."""
    res = SuiteResult("moufang-flag-agreement")
    for name, t in inputs:
        res.hypothesis_count += 1
        flags = t.moufang_report()
        res.check_count += 3
        if len({flags.left, flags.right, flags.middle}) != 1:
            res.violations.append("%s: flags disagree %r" % (name, flags))
    return res


def suite_nuclei_coincide(inputs) -> SuiteResult:
    """On Moufang tables the three one-sided nuclei are equal."""
    res = SuiteResult("moufang-nuclei-coincide")
    for name, t in inputs:
        if not t.is_moufang():
            continue
        res.hypothesis_count += 1
        a = sl.nucleus_left(t).elements
        b = sl.nucleus_middle(t).elements
        c = sl.nucleus_right(t).elements
        res.check_count += 2
        if not (a == b == c):
            res.violations.append("%s: nuclei differ %r %r %r" % (name, a, b, c))
    return res


def suite_lagrange(inputs) -> SuiteResult:
    """Orders of the standard derived subloops divide the loop order
    on Moufang tables."""
    res = SuiteResult("moufang-lagrange")
    for name, t in inputs:
        if not t.is_moufang():
            continue
        res.hypothesis_count += 1
        parts = {
            "nucleus": sl.nucleus(t),
            "center": sl.center(t),
            "commutator-subloop": sl.commutator_subloop(t),
            "associator-subloop": sl.associator_subloop(t),
        }
        sylow = sl.sylow_subloop(t, 2)
        if sylow.subloop is not None:
            parts["sylow-2"] = sylow.subloop
        hall = sl.hall_3prime_subgroup(t)
        if hall.subloop is not None:
            parts["hall-3prime"] = hall.subloop
        for label, H in parts.items():
            res.check_count += 1
            if t.order % len(H):
                res.violations.append(
                    "%s: %s has order %d, not a divisor of %d" % (name, label, len(H), t.order)
                )
    return res


def suite_quotient_homomorphism(inputs) -> SuiteResult:
    """Projections onto quotients by normal derived subloops are
    homomorphisms with the expected kernel."""
    res = SuiteResult("quotient-projection")
    for name, t in inputs:
        for label, H in (("commutator", sl.commutator_subloop(t)),
                         ("associator", sl.associator_subloop(t))):
            if not sl.is_normal(t, H):
                continue
            res.hypothesis_count += 1
            q = sl.quotient(t, H)  # raises on any ill-definedness
            hset = set(H.elements)
            kernel = {x for x in t.elements if q.projection[x - 1] == 1}
            res.check_count += t.order * t.order + 1
            if kernel != hset:
                res.violations.append("%s: %s quotient kernel %r != %r" % (name, label, kernel, hset))
            for a in t.elements:
                for b in t.elements:
                    if q.projection[t.rows[a - 1][b - 1] - 1] != \
                            q.table.rows[q.projection[a - 1] - 1][q.projection[b - 1] - 1]:
                        res.violations.append("%s: %s projection breaks at (%d,%d)" % (name, label, a, b))
                        break
    return res


def suite_sylow_factorization(inputs) -> SuiteResult:
    """Automorphic Moufang tables factor as S * N with S a biggest-3-power
    subloop and N the nucleus."""
    res = SuiteResult("sylow-nucleus-factorization")
    for name, t in inputs:
        if not (t.is_moufang() and is_automorphic(t)):
            continue
        res.hypothesis_count += 1
        sylow = sl.sylow_subloop(t, 3)
        if sylow.subloop is None:
            res.violations.append("%s: no exact 3-power subloop (target %d)" % (name, sylow.target))
            continue
        nuc = set(sl.nucleus(t).elements)
        products = set()
        for s in sylow.subloop.elements:
            for v in nuc:
                products.add(t.rows[s - 1][v - 1])
        res.check_count += 1
        if products != set(t.elements):
            res.violations.append("%s: S*N covers %d of %d elements" % (name, len(products), t.order))
    return res


def _distinct_small_generated(t, max_size=3):
    """Element sets of subloops generated by up to max_size elements."""
    seen = set()
    elems = [x for x in t.elements if x != 1]
    for size in range(1, max_size + 1):
        for seed in combinations(elems, size):
            H = sl.generate_subloop(t, seed)
            seen.add(H.elements)
    return sorted(seen)


def suite_bruck(inputs):
    """Classical identities for loops whose left inner maps are all
    automorphisms and whose table is Moufang.

    Returns five SuiteResults: commutators land in the nucleus, the
    expansion [u*v,t] = ([u,t]*[[u,t],v])*[v,t] holds modulo the
    associator subloop (exactly, when the table is associative), nucleus
    factors drop out of associators, cubes land in the nucleus
    (two-sided automorphic case only), and associator subloops of
    small-generated subloops are central in them.
    """
    r_comm = SuiteResult("bruck-commutators-in-nucleus")
    r_expand = SuiteResult("bruck-commutator-expansion")
    r_absorb = SuiteResult("bruck-nucleus-absorption")
    r_cubes = SuiteResult("bruck-cubes-in-nucleus")
    r_3gen = SuiteResult("bruck-3gen-associator-central")
    for name, t in inputs:
        if not (t.is_moufang() and is_left_automorphic(t)):
            continue
        rows = t.rows
        n = t.order
        nuc = set(sl.nucleus(t).elements)
        for r in (r_comm, r_expand, r_absorb, r_3gen):
            r.hypothesis_count += 1

        for u in t.elements:
            for v in t.elements:
                r_comm.check_count += 1
                if t.commutator(u, v) not in nuc:
                    r_comm.violations.append("%s: [%d,%d] outside the nucleus" % (name, u, v))

        # the quotient by the associator subloop is a group, so the group
        # expansion of [u*v,w] holds there; compare cosets, which is an
        # exact comparison whenever the table is associative
        A = sl.associator_subloop(t)
        proj = sl.quotient(t, A).projection if sl.is_normal(t, A) else None
        comm = [[t.commutator(u, v) for v in t.elements] for u in t.elements]
        for u in t.elements:
            for v in t.elements:
                uv = rows[u - 1][v - 1]
                for w in t.elements:
                    r_expand.check_count += 1
                    lhs = comm[uv - 1][w - 1]
                    ut = comm[u - 1][w - 1]
                    rhs = rows[rows[ut - 1][comm[ut - 1][v - 1] - 1] - 1][comm[v - 1][w - 1] - 1]
                    if proj is not None:
                        same = proj[lhs - 1] == proj[rhs - 1]
                    else:
                        same = lhs == rhs
                    if not same:
                        r_expand.violations.append(
                            "%s: [%d*%d,%d] = %d not matched by the expansion value %d" % (name, u, v, w, lhs, rhs)
                        )

        for a in nuc:
            for u in t.elements:
                au = rows[a - 1][u - 1]
                ua = rows[u - 1][a - 1]
                for v in t.elements:
                    for w in t.elements:
                        base = t.associator(u, v, w)
                        r_absorb.check_count += 2
                        if t.associator(au, v, w) != base or t.associator(ua, v, w) != base:
                            r_absorb.violations.append(
                                "%s: nucleus factor %d shifts associator (%d,%d,%d)" % (name, a, u, v, w)
                            )

        if is_automorphic(t):
            r_cubes.hypothesis_count += 1
            for u in t.elements:
                r_cubes.check_count += 1
                cube = rows[u - 1][rows[u - 1][u - 1] - 1]
                if cube not in nuc:
                    r_cubes.violations.append("%s: %d cubed lands outside the nucleus" % (name, u))

        for elements in _distinct_small_generated(t):
            sub, _ = sl.restriction(t, elements)
            inner = set(sl.associator_subloop(sub).elements)
            central = set(sl.center(sub).elements)
            r_3gen.check_count += 1
            if not inner <= central:
                r_3gen.violations.append(
                    "%s: subloop %r has associator subloop %r outside its center %r"
                    % (name, elements, sorted(inner), sorted(central))
                )
    return [r_comm, r_expand, r_absorb, r_cubes, r_3gen]


# -- enumeration-backed suites ----------------------------------------


def suite_main_theorem(inputs, enums=None, max_order=None) -> SuiteResult:
    """Zero proper half-morphisms on loops that are Moufang with all
    inner maps automorphisms; runs the full driver on every input."""
    res = SuiteResult("main-theorem")
    for name, t in inputs:
        enum = _enum(name, t, enums, max_order, res.notes)
        if enum is None:
            res.notes[-1] = "skipped %s (order %d above threshold)" % (name, t.order)
            continue
        report = verify_main_theorem(t, name=name, enumeration=enum)
        res.check_count += report.total
        if report.hypotheses_hold:
            res.hypothesis_count += 1
            if report.census[HalfKind.PROPER_HALF]:
                res.violations.append(
                    "%s: %d proper maps despite both hypotheses" % (name, report.census[HalfKind.PROPER_HALF])
                )
    return res


def suite_half_group(inputs, enums=None, max_order=None) -> SuiteResult:
    """Complete half-morphism sets are groups under composition."""
    res = SuiteResult("half-maps-form-group")
    for name, t in inputs:
        enum = _enum(name, t, enums, max_order, res.notes)
        if enum is None:
            res.notes[-1] = "skipped %s" % name
            continue
        res.hypothesis_count += 1
        res.check_count += 2 * len(enum.maps)
        if not half_maps_form_group_check(t, enum):
            res.violations.append("%s: enumerated maps are not closed" % name)
    return res


def suite_semi_isomorphism(inputs, enums=None, max_order=None) -> SuiteResult:
    """Every half-morphism of a Moufang table preserves x*y*x products:
    t((u*v)*u) = (t(u)*t(v))*t(u)."""
    res = SuiteResult("semi-isomorphism")
    for name, t in inputs:
        if not t.is_moufang():
            continue
        enum = _enum(name, t, enums, max_order, res.notes)
        if enum is None:
            res.notes[-1] = "skipped %s" % name
            continue
        res.hypothesis_count += 1
        for m in enum.maps:
            res.check_count += 1
            if not is_semi_isomorphism(m):
                res.violations.append("%s: map %s breaks the sandwich law" % (name, m.cycles()))
    return res


def suite_gg_witness(inputs, enums=None, max_order=None) -> SuiteResult:
    """Every proper half-morphism of a Moufang table has a witness
    triple: an element that fails to commute with a forward-only partner
    and a reversed-only partner."""
    from .halfmorph import find_gg_triples

    res = SuiteResult("proper-half-witness-triples")
    for name, t in inputs:
        if not t.is_moufang():
            continue
        enum = _enum(name, t, enums, max_order, res.notes)
        if enum is None:
            res.notes[-1] = "skipped %s" % name
            continue
        for m, cls in zip(enum.maps, enum.classes()):
            if cls.kind is not HalfKind.PROPER_HALF:
                continue
            res.hypothesis_count += 1
            res.check_count += 1
            if not find_gg_triples(m, limit=1):
                res.violations.append("%s: proper map %s has no witness triple" % (name, m.cycles()))
    return res


def suite_odd_order_trivial(inputs, enums=None, max_order=None) -> SuiteResult:
    """Odd-order Moufang tables carry no proper half-morphisms."""
    res = SuiteResult("odd-order-trivial")
    for name, t in inputs:
        if t.order % 2 == 0 or not t.is_moufang():
            continue
        enum = _enum(name, t, enums, max_order, res.notes)
        if enum is None:
            res.notes[-1] = "skipped %s" % name
            continue
        res.hypothesis_count += 1
        for m, cls in zip(enum.maps, enum.classes()):
            res.check_count += 1
            if cls.kind is HalfKind.PROPER_HALF:
                res.violations.append("%s: odd order yet proper map %s" % (name, m.cycles()))
    return res


def _induced_images(proj, k, m):
    """Images of the quotient map induced by m, or None if they depend
    on the coset representative."""
    images = [0] * k
    for x in range(1, m.domain.order + 1):
        c = proj[x - 1]
        v = proj[m.images[x - 1] - 1]
        if images[c - 1] == 0:
            images[c - 1] = v
        elif images[c - 1] != v:
            return None
    return tuple(images)


def suite_induced_quotient(inputs, enums=None, max_order=None) -> SuiteResult:
    """Pushing any half-morphism down to the associator quotient gives a
    trivial map whenever that quotient is a group and the map fixes the
    associator subloop setwise.

    Induced images are computed in place and classified once per distinct
    image tuple; a few maps per loop are cross-checked against the full
    quotient-pushdown operation.
    """
    res = SuiteResult("induced-quotient-trivial")
    for name, t in inputs:
        A = sl.associator_subloop(t)
        if not sl.is_normal(t, A):
            continue
        q = sl.quotient(t, A)
        if not q.table.is_associative():
            continue
        enum = _enum(name, t, enums, max_order, res.notes)
        if enum is None:
            res.notes[-1] = "skipped %s" % name
            continue
        aset = set(A.elements)
        proj = q.projection
        k = q.table.order
        kinds = {}
        crosschecked = 0
        for m in enum.maps:
            if {m.images[a - 1] for a in aset} != aset:
                continue
            res.hypothesis_count += 1
            res.check_count += 1
            key = _induced_images(proj, k, m)
            if key is None:
                res.violations.append("%s: %s has no well-defined quotient image" % (name, m.cycles()))
                continue
            if key not in kinds:
                kinds[key] = classify(make_half_map(q.table, q.table, key)).kind
            if crosschecked < 3:
                crosschecked += 1
                if induced_on_quotient(m).images != key:
                    res.violations.append("%s: quotient pushdown of %s disagrees with the in-place images" % (name, m.cycles()))
            if kinds[key] is HalfKind.PROPER_HALF:
                res.violations.append("%s: induced image of %s is proper" % (name, m.cycles()))
    return res


def suite_commutator_d_set(inputs, enums=None, max_order=None) -> SuiteResult:
    """Central-commutator facts for half-morphisms of 3-generated
    left-automorphic Moufang subloops whose induced associator-quotient
    map preserves products: commutators of derived-subloop elements
    against reversed-only elements are central, and every pair obeying
    the reversed law has a central commutator on both sides of the map."""
    from .halfmorph import d_set

    res = SuiteResult("commutator-d-set-central")
    for name, t in inputs:
        for elements in _distinct_small_generated(t):
            sub, _ = sl.restriction(t, elements)
            if not (sub.is_moufang() and is_left_automorphic(sub)):
                continue
            A = sl.associator_subloop(sub)
            if not sl.is_normal(sub, A):
                continue
            q = sl.quotient(sub, A)
            enum_key = name if len(elements) == t.order else \
                "%s!%s" % (name, ",".join(map(str, elements)))
            enum = _enum(enum_key, sub, enums, max_order, res.notes)
            if enum is None:
                res.notes[-1] = "skipped %s" % enum_key
                continue
            aset = set(A.elements)
            proj = q.projection
            k = q.table.order
            derived = set(sl.commutator_subloop(sub).elements)
            central = set(sl.center(sub).elements)
            srows = sub.rows
            n = sub.order
            comm_central = [[sub.commutator(u, v) in central for v in sub.elements]
                            for u in sub.elements]
            kinds = {}
            for m in enum.maps:
                if {m.images[a - 1] for a in aset} != aset:
                    continue
                key = _induced_images(proj, k, m)
                if key is None:
                    continue
                if key not in kinds:
                    kinds[key] = classify(make_half_map(q.table, q.table, key)).kind
                if kinds[key] not in (HalfKind.ISOMORPHISM, HalfKind.BOTH):
                    continue
                res.hypothesis_count += 1
                dset = d_set(m)
                for d in derived:
                    for g in dset:
                        res.check_count += 1
                        if not comm_central[d - 1][g - 1]:
                            res.violations.append(
                                "%s sub %r: [%d,%d] not central" % (name, elements, d, g)
                            )
                imgs = m.images
                for u in range(1, n + 1):
                    iu = imgs[u - 1]
                    ru = srows[u - 1]
                    for v in range(1, n + 1):
                        got = imgs[ru[v - 1] - 1]
                        iv = imgs[v - 1]
                        if got == srows[iv - 1][iu - 1]:
                            res.check_count += 1
                            if not (comm_central[u - 1][v - 1] and comm_central[iu - 1][iv - 1]):
                                res.violations.append(
                                    "%s sub %r: reversed pair (%d,%d) has a non-central commutator"
                                    % (name, elements, u, v)
                                )
    return res


def run_theorem_suites(inputs, enums=None, max_order=None):
    """Run every suite over the given (name, table) list."""
    if enums is None:
        enums = {}
    results = [
        suite_moufang_flag_agreement(inputs),
        suite_nuclei_coincide(inputs),
        suite_lagrange(inputs),
        suite_quotient_homomorphism(inputs),
        suite_sylow_factorization(inputs),
    ]
    results.extend(suite_bruck(inputs))
    results.extend([
        suite_main_theorem(inputs, enums, max_order),
        suite_half_group(inputs, enums, max_order),
        suite_semi_isomorphism(inputs, enums, max_order),
        suite_gg_witness(inputs, enums, max_order),
        suite_odd_order_trivial(inputs, enums, max_order),
        suite_induced_quotient(inputs, enums, max_order),
        suite_commutator_d_set(inputs, enums, max_order),
    ])
    return results
