from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wpcurves.core import DomainError, WeightedCurve, euler_characteristic, weight_lcm
from wpcurves.k0 import K0Class, averaged_euler_form, simple_sheaf, simple_sheaf_degree, structure_sheaf

classes = st.builds(K0Class, st.integers(-50, 50), st.integers(-50, 50))
curves = st.builds(WeightedCurve, st.integers(0, 4), st.lists(st.integers(2, 12), max_size=5))


def test_klein_quartic_line():
    c = WeightedCurve.line(2, 3, 7)
    assert weight_lcm(c) == 42
    assert averaged_euler_form(c, structure_sheaf(), structure_sheaf()) == Fraction(-1, 84)
    assert simple_sheaf_degree(c, 7) == 6
    assert simple_sheaf(c) == K0Class(0, 42)


def test_simple_sheaf_needs_a_weight():
    with pytest.raises(DomainError):
        simple_sheaf_degree(WeightedCurve.line(2, 3, 7), 5)


def test_class_arithmetic():
    x, y = K0Class(1, 2), K0Class(3, -1)
    assert x + y == K0Class(4, 1)
    assert x - y == K0Class(-2, 3)
    assert -x == K0Class(-1, -2)
    assert 3 * x == K0Class(3, 6)


@given(curves, classes, classes, classes, st.integers(-9, 9))
def test_bilinear(curve, x, y, z, k):
    f = lambda u, v: averaged_euler_form(curve, u, v)  # noqa: E731
    assert f(x + z, y) == f(x, y) + f(z, y)
    assert f(x, y + z) == f(x, y) + f(x, z)
    assert f(k * x, y) == k * f(x, y)


@given(curves, classes, classes)
def test_symmetric_part_is_rank_term(curve, x, y):
    chi = euler_characteristic(curve)
    assert averaged_euler_form(curve, x, y) + averaged_euler_form(curve, y, x) == chi * x.rank * y.rank


@given(curves, classes)
def test_rank_zero_classes_are_isotropic(curve, x):
    tors = K0Class(0, x.degree)
    assert averaged_euler_form(curve, tors, tors) == 0
