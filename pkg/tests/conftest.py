"""Shared fixtures: the five catalogue algebras, built once per session.

Algebra construction is cached inside the package, so these fixtures are
thin; they exist to give tests a uniform way to sweep the catalogue.
"""

import pytest

from ucz import ALGEBRA_DESCRIPTORS, algebra_from_descriptor

TYPE_A = tuple(d for d in ALGEBRA_DESCRIPTORS if d.startswith("A"))


@pytest.fixture(params=ALGEBRA_DESCRIPTORS)
def any_algebra(request):
    return algebra_from_descriptor(request.param)


@pytest.fixture(params=TYPE_A)
def type_a_algebra(request):
    return algebra_from_descriptor(request.param)


@pytest.fixture
def a1():
    return algebra_from_descriptor("A1")


@pytest.fixture
def a2():
    return algebra_from_descriptor("A2")


@pytest.fixture
def a3():
    return algebra_from_descriptor("A3")


@pytest.fixture
def b2():
    return algebra_from_descriptor("B2")


@pytest.fixture
def g2():
    return algebra_from_descriptor("G2")
