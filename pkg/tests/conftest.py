"""Shared fixtures; heavy enumerations are computed once per session."""

from __future__ import annotations

import pytest

from loopsmith import catalog
from loopsmith.halfmorph import enumerate_half_automorphisms, make_half_map
from loopsmith.innermaps import perm_from_cycles

_ENUM_CACHE = {}


@pytest.fixture(scope="session")
def get_enum():
    """Memoized complete enumeration keyed by catalog name."""

    def _get(name, table):
        if name not in _ENUM_CACHE:
            _ENUM_CACHE[name] = enumerate_half_automorphisms(table)
        return _ENUM_CACHE[name]

    return _get


@pytest.fixture(scope="session")
def q1():
    return catalog.builtin("Q1").table


@pytest.fixture(scope="session")
def q2():
    return catalog.builtin("Q2").table


@pytest.fixture(scope="session")
def chein12():
    return catalog.builtin("M(S3,2)").table


@pytest.fixture(scope="session")
def s3():
    return catalog.builtin("S3").table


@pytest.fixture(scope="session")
def q1_enum(q1, get_enum):
    return get_enum("Q1", q1)


@pytest.fixture(scope="session")
def q2_enum(q2, get_enum):
    return get_enum("Q2", q2)


@pytest.fixture(scope="session")
def phi1(q1):
    return make_half_map(q1, q1, perm_from_cycles(16, [(5, 8)]))


@pytest.fixture(scope="session")
def phi2(q2):
    return make_half_map(q2, q2, perm_from_cycles(8, [(3, 5), (4, 6), (7, 8)]))
