"""Permutation helpers, inner mappings, and group closure."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopsmith import catalog
from loopsmith.innermaps import (
    apply_perm,
    compose,
    cycles_str,
    group_closure,
    identity_perm,
    inner_l,
    inner_r,
    inner_t,
    inner_map_witness,
    inverse_perm,
    is_automorphic,
    is_automorphism,
    is_left_automorphic,
    left_translation,
    moufang_l_iff_r_check,
    perm_from_cycles,
    right_translation,
)


def test_identity_and_apply():
    assert identity_perm(4) == (1, 2, 3, 4)
    assert apply_perm((2, 3, 1), 1) == 2


def test_compose_applies_right_factor_first():
    p = (2, 1, 3)
    q = (1, 3, 2)
    assert compose(p, q) == (2, 3, 1)
    assert compose(q, p) == (3, 1, 2)


@settings(max_examples=50, deadline=None)
@given(data=st.data(), n=st.integers(min_value=1, max_value=7))
def test_inverse_perm_round_trip(data, n):
    p = tuple(data.draw(st.permutations(list(range(1, n + 1)))))
    assert compose(p, inverse_perm(p)) == identity_perm(n)
    assert compose(inverse_perm(p), p) == identity_perm(n)


def test_perm_from_cycles():
    assert perm_from_cycles(5, []) == (1, 2, 3, 4, 5)
    assert perm_from_cycles(5, [(2, 4)]) == (1, 4, 3, 2, 5)
    assert perm_from_cycles(4, [(1, 2, 3)]) == (2, 3, 1, 4)
    with pytest.raises(ValueError, match="out of range"):
        perm_from_cycles(3, [(1, 4)])
    with pytest.raises(ValueError, match="not disjoint"):
        perm_from_cycles(4, [(1, 2), (2, 3)])


def test_cycles_str():
    assert cycles_str((1, 2, 3)) == "()"
    assert cycles_str(perm_from_cycles(16, [(5, 8)])) == "(5,8)"
    assert cycles_str(perm_from_cycles(8, [(3, 5), (4, 6), (7, 8)])) == "(3,5)(4,6)(7,8)"
    assert cycles_str((2, 3, 1, 5, 4)) == "(1,2,3)(4,5)"


@settings(max_examples=50, deadline=None)
@given(data=st.data(), n=st.integers(min_value=2, max_value=8))
def test_cycles_str_least_elements_ascend(data, n):
    p = tuple(data.draw(st.permutations(list(range(1, n + 1)))))
    text = cycles_str(p)
    if text == "()":
        assert p == identity_perm(n)
    else:
        leads = [int(part.split(",")[0]) for part in text[1:-1].split(")(")]
        assert leads == sorted(leads)


def test_translations(s3):
    for a in s3.elements:
        lt = left_translation(s3, a)
        rt = right_translation(s3, a)
        assert sorted(lt) == list(s3.elements)
        assert sorted(rt) == list(s3.elements)
        for z in s3.elements:
            assert apply_perm(lt, z) == s3.mul(a, z)
            assert apply_perm(rt, z) == s3.mul(z, a)


def test_inner_maps_fix_identity(q1, q2):
    for t in (q1, q2):
        for x in t.elements:
            assert apply_perm(inner_t(t, x), 1) == 1
            for y in t.elements:
                assert apply_perm(inner_l(t, x, y), 1) == 1
                assert apply_perm(inner_r(t, x, y), 1) == 1


def test_is_automorphism_basics(q1):
    assert is_automorphism(q1, identity_perm(16))
    assert not is_automorphism(q1, perm_from_cycles(16, [(5, 8)]))
    with pytest.raises(ValueError):
        is_automorphism(q1, identity_perm(4))


def test_groups_are_automorphic(s3):
    assert is_automorphic(s3)
    assert is_left_automorphic(s3)
    assert inner_map_witness(s3) is None


def test_q1_left_automorphic_but_not_automorphic(q1):
    assert is_left_automorphic(q1)
    assert not is_automorphic(q1)
    family, x, y, perm = inner_map_witness(q1)
    assert (family, x, y) == ("t", 2, None)
    assert cycles_str(perm) == "(3,7)(5,8)(9,12)(10,14)(11,15)(13,16)"


def test_q2_is_automorphic(q2):
    assert is_automorphic(q2)
    assert is_left_automorphic(q2)


def test_chein_loop_fails_left_family(chein12):
    assert not is_left_automorphic(chein12)
    assert not is_automorphic(chein12)
    family, x, y, perm = inner_map_witness(chein12)
    assert (family, x, y) == ("l", 2, 4)
    assert cycles_str(perm) == "(7,8,9)(10,12,11)"


def test_moufang_l_iff_r(q1, q2, chein12):
    assert moufang_l_iff_r_check(q1)
    assert moufang_l_iff_r_check(chein12)
    with pytest.raises(ValueError, match="Moufang"):
        moufang_l_iff_r_check(q2)


def _inner_generators(t):
    gens = []
    for x in t.elements:
        gens.append(inner_t(t, x))
        for y in t.elements:
            gens.append(inner_l(t, x, y))
            gens.append(inner_r(t, x, y))
    return gens


def test_inner_closure_orders(q1, q2):
    assert group_closure(_inner_generators(q1)).order == 64
    assert group_closure(_inner_generators(q2)).order == 4


def test_group_closure_small():
    handle = group_closure([(2, 1, 3)])
    assert handle.order == 2
    assert not handle.capped
    assert identity_perm(3) in handle.elements


def test_group_closure_cap():
    handle = group_closure([(2, 3, 4, 5, 1)], cap=3)
    assert handle.capped
    assert handle.elements is None
    assert handle.order is None


def test_group_closure_argument_errors():
    with pytest.raises(ValueError):
        group_closure([])
    with pytest.raises(ValueError):
        group_closure([(1, 2)], cap=0)
    with pytest.raises(ValueError):
        group_closure([(1, 2), (1, 2, 3)])
