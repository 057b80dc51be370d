import cmath

import numpy as np
import pytest
from hypothesis import given, strategies as st

from symbidisc import action, bidisc, mobius, royal, synchrony
from symbidisc.synchrony import SharpnessReport

from conftest import disc_points

unit = st.floats(-np.pi, np.pi).map(lambda t: cmath.exp(1j * t))


def test_eigencheck_examples():
    rep = synchrony.royal_eigencheck(0, 1j)
    assert abs(rep.royal_eigenvalue - 1j) < 1e-12
    assert abs(rep.flat_eigenvalue + 1) < 1e-12
    rep = synchrony.royal_eigencheck(0.4 - 0.2j, cmath.exp(0.9j))
    assert rep.valid(1e-7)


@given(disc_points(0.9), unit)
def test_eigencheck_random(a, eta):
    rep = synchrony.royal_eigencheck(a, eta)
    assert rep.valid(1e-7)
    assert abs(rep.flat_eigenvalue - rep.royal_eigenvalue ** 2) < 1e-7


def test_eigencheck_fd_agrees():
    assert synchrony.royal_eigencheck(0.3j, cmath.exp(2j), method="fd").valid(1e-6)


@given(disc_points(0.8), unit)
def test_double_speed(a, eta):
    grid = [0, 0.5, -0.3j, 0.7 + 0.1j, a]
    assert synchrony.leaf_double_speed_residual(a, eta, grid) < 1e-9


def test_double_speed_rotated_parametrization():
    grid = [0.1, 0.5j, -0.6 + 0.2j]
    c = mobius.rotation(cmath.exp(0.4j))
    # rotating about the base point commutes with m, so double speed persists
    assert synchrony.leaf_double_speed_residual(0, 1j, grid, c) < 1e-9
    # a map moving the base point does not
    assert synchrony.leaf_double_speed_residual(0, 1j, grid, mobius.blaschke(0.4)) > 1e-3


@pytest.fixture(scope="module")
def g_instance():
    inst = royal.make_instance(royal.IDENTITY)
    return inst, royal.consistent_pair(inst)


def test_sharp_residual_on_F0_real_slice(g_instance):
    inst, pair = g_instance
    mu = np.array([0, 0.4])
    # on (0, p) with p > 0 the fixed and adapted pairs coincide
    for adapted in (True, False):
        assert synchrony.sharp_action_order(inst, pair, mu, adapted=adapted).passed


def test_sharp_adapted_vs_fixed(g_instance, rng):
    inst, pair = g_instance
    s = np.array(bidisc.leaf_point(bidisc.FlatLeaf(0.3 + 0.2j), 0.5j))
    assert synchrony.sharp_action_order(inst, pair, s).fitted_slope >= 1.8
    assert synchrony.sharp_action_order(inst, pair, s, adapted=False).fitted_slope < 1.2


def test_sharp_near_royal(g_instance):
    inst, pair = g_instance
    s = np.array([0, 1e-3])
    assert synchrony.sharp_action_order(inst, pair, s).passed
    with pytest.raises(ValueError):
        synchrony.sharp_action_residual(inst, pair, np.array([0, 0]), 1e-3)


def test_sharp_antiholomorphic_control(rng):
    inst = royal.make_instance(royal.ANTIHOLOMORPHIC)
    pair = royal.consistent_pair(inst)
    mu = inst.forward(np.array(bidisc.random_point(rng, 0.7)))
    assert synchrony.sharp_action_order(inst, pair, mu).fitted_slope <= 1.2


def test_sharpness_report_validation():
    with pytest.raises(ValueError):
        SharpnessReport([1e-2, 1e-3], [1, 2], 1.0)
    with pytest.raises(ValueError):
        SharpnessReport([1e-4, 1e-3, 1e-2], [1, 2, 3], 1.0)
    assert SharpnessReport([1e-2, 1e-3, 1e-4], [1e-15] * 3, 0.0).passed


def test_adapted_automorphism_lands_on_F0(rng):
    inst = royal.make_instance(royal.TRIANGULAR)
    for _ in range(5):
        s = bidisc.random_point(rng, 0.8)
        mu = inst.forward(np.array(s))
        k = synchrony.adapted_automorphism(inst, mu)
        C = bidisc.pseudo_param(s)
        assert np.allclose(action.gamma(k, (0, C)), s, atol=1e-10)


@pytest.mark.parametrize("kind", [royal.IDENTITY, royal.LINEAR, royal.TRIANGULAR])
def test_transported_linearity(kind, rng):
    inst = royal.make_instance(kind)
    pair = royal.consistent_pair(inst)
    s = bidisc.random_point(rng, 0.7)
    t = bidisc.leaf_point(bidisc.FlatLeaf(0.2j), 0.1)
    m = mobius.random_automorphism(rng, 0.5)
    mu = inst.forward(np.array(action.gamma(m, t)))
    s = action.gamma(mobius.random_automorphism(rng, 0.5), t)
    assert synchrony.transported_linearity_check(inst, pair, s, mu).passed


def test_transported_linearity_rejects_mismatched_C():
    inst = royal.make_instance(royal.IDENTITY)
    with pytest.raises(ValueError):
        synchrony.transported_linearity_check(inst, royal.consistent_pair(inst), (0, 0.2), np.array([0, 0.5]))
