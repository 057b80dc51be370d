import cmath
import math

import numpy as np
import pytest
from hypothesis import given

from symbidisc import mobius
from symbidisc.mobius import DiscAutomorphism

from conftest import automorphisms, disc_points


def test_validation():
    with pytest.raises(ValueError):
        DiscAutomorphism(2.0, 0)
    with pytest.raises(ValueError):
        DiscAutomorphism(1.0, 1.0)


def test_blaschke_values():
    b = mobius.blaschke(0.5)
    assert abs(b(0.5)) < 1e-15
    assert abs(b(0) + 0.5) < 1e-15
    with pytest.raises(ValueError):
        mobius.apply(b, 1.0)


@given(automorphisms(), automorphisms(), disc_points())
def test_composition_matches_pointwise(m1, m2, z):
    assert abs(mobius.compose(m1, m2)(z) - m1(m2(z))) < 1e-12
    assert abs((m1 @ m2)(z) - m1(m2(z))) < 1e-12


@given(automorphisms(), disc_points())
def test_inverse(m, z):
    assert abs(mobius.inverse(m)(m(z)) - z) < 1e-12
    assert mobius.compose(m, mobius.inverse(m)).is_identity(1e-12)


@given(automorphisms(), disc_points(0.8))
def test_derivative_against_difference(m, z):
    h = 1e-6
    fd = (m(z + h) - m(z - h)) / (2 * h)
    assert abs(fd - m.derivative(z)) < 1e-6 * max(1, abs(fd))


def test_charts():
    m = mobius.m_from_chart(mobius.U1, 0.5, 0.2j)
    assert mobius.chart_of(m)[0] == mobius.U1
    assert abs(mobius.chart_of(m)[1] - 0.5) < 1e-15
    half_turn = mobius.m_from_chart(mobius.U2, math.pi, 0)
    assert mobius.chart_of(half_turn)[:2] == (mobius.U2, math.pi)
    with pytest.raises(ValueError):
        mobius.m_from_chart(mobius.U1, math.pi, 0)
    with pytest.raises(ValueError):
        mobius.m_from_chart(mobius.U2, 0.0, 0)
    with pytest.raises(ValueError):
        mobius.m_from_chart("U3", 0.0, 0)


@given(disc_points(), disc_points(), automorphisms())
def test_pseudohyperbolic_invariance(z1, z2, m):
    assert abs(mobius.pseudohyperbolic(m(z1), m(z2)) - mobius.pseudohyperbolic(z1, z2)) < 1e-10


def test_poincare_origin():
    assert abs(mobius.poincare(0, 0.5) - math.atanh(0.5)) < 1e-15


@given(disc_points(), disc_points(), )
def test_conjugate_rotation_fixes_point(a, e):
    if abs(e) < 1e-3:
        return
    eta = e / abs(e)
    m = mobius.conjugate_rotation(a, eta)
    assert abs(m(a) - a) < 1e-12
    assert abs(m.derivative(a) - eta) < 1e-10


def test_fixed_points_and_involutions():
    assert mobius.fixed_points(mobius.identity()) == mobius.WHOLE_DISC
    assert mobius.fixed_points(mobius.rotation(1j)) == (0j,)
    a = 0.3 + 0.2j
    m = mobius.conjugate_rotation(a, -1)
    assert mobius.is_involution(m, 1e-12)
    fps = mobius.fixed_points(m)
    assert len(fps) == 1 and abs(fps[0] - a) < 1e-10
    assert not mobius.is_involution(mobius.rotation(1j))


def test_lie_tangent_field():
    for lt in mobius.LIE_BASIS:
        z = 0.3 - 0.1j
        t = 1e-6
        fd = (lt.curve(t)(z) - lt.curve(-t)(z)) / (2 * t)
        assert abs(fd - lt.disc_field(z)) < 1e-8


def test_inner_automorphism():
    b = mobius.blaschke(0.4)
    m = mobius.rotation(cmath.exp(0.3j))
    k = mobius.inner_automorphism(b, m)
    z = 0.1 + 0.2j
    assert abs(k(z) - b(m(mobius.inverse(b)(z)))) < 1e-12
