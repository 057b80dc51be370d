import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from symbidisc import action, bidisc
from symbidisc.bidisc import FlatLeaf, Membership

from conftest import automorphisms, disc_points, g_points


def test_pi_and_roots_examples():
    assert np.allclose(bidisc.pi(0.3, -0.3), (0, -0.09), atol=1e-16)
    # x^2 + p has roots +-i sqrt(p); +-sqrt(p) belong to (0, -p)
    assert np.allclose(bidisc.roots((0, 0.25)), [-0.5j, 0.5j])
    assert np.allclose(bidisc.roots((0, -0.25)), [-0.5, 0.5])
    z, w = bidisc.roots((1, 0.3))
    assert abs(abs(z) ** 2 - 0.3) < 1e-14 and abs(abs(w) ** 2 - 0.3) < 1e-14
    # independent oracle
    oracle = sorted(np.roots([1, -1, 0.3]), key=lambda c: (c.real, c.imag))
    assert np.allclose([z, w], oracle)


@given(g_points(0.99))
def test_pi_roots_round_trip(s):
    assert np.abs(np.array(bidisc.pi(*bidisc.roots(s))) - np.array(s)).max() < 1e-12


def test_roots_stable_when_small_root():
    z, w = bidisc.roots((1 + 1e-12, 1e-12))
    assert abs(z - 1e-12) < 1e-24 or abs(w - 1e-12) < 1e-24


def test_contains():
    assert bidisc.contains((0, 0)) is Membership.INTERIOR
    assert bidisc.contains((2, 1)) is Membership.BOUNDARY
    assert bidisc.contains((3, 1)) is Membership.OUTSIDE
    with pytest.raises(ValueError):
        bidisc.require_interior((2, 1))


def test_royal():
    assert bidisc.royal(0) == (0, 0)
    assert bidisc.royal(0.5) == (1, 0.25)
    assert bidisc.is_royal((1, 0.25))
    assert not bidisc.is_royal((0, 0.3))
    assert bidisc.royal_param((1, 0.25)) == 0.5
    with pytest.raises(ValueError):
        bidisc.royal_param((0, 0.3))


def test_leaf_of_examples():
    assert bidisc.leaf_of((0, 0.4)).beta == 0
    zeta = 0.3 - 0.4j
    assert abs(bidisc.leaf_of(bidisc.royal(zeta)).beta - 2 * zeta / (1 + abs(zeta) ** 2)) < 1e-15
    beta = 0.3 + 0.2j
    assert abs(bidisc.leaf_of(bidisc.leaf_point(FlatLeaf(beta), 0.1)).beta - beta) < 1e-14
    with pytest.raises(ValueError):
        bidisc.leaf_of((0, 1))


@given(g_points(0.99))
def test_flat_coords_round_trip_and_leaf(s):
    fc = bidisc.flat_coords(s)
    assert abs(fc.beta) < 1
    assert np.abs(np.array(bidisc.from_flat_coords(fc)) - np.array(s)).max() < 1e-12
    leaf = bidisc.leaf_of(s)
    other = bidisc.leaf_point(leaf, 0.5 * fc.z - 0.2)
    assert abs(bidisc.leaf_of(other).beta - leaf.beta) < 1e-12


def test_flat_chart_axes():
    assert bidisc.from_flat_coords((0.3, 0)) == (0.3, 0)
    assert bidisc.from_flat_coords((0, 0.3)) == (0, 0.3)


def test_royal_intersection_half():
    point, z0 = bidisc.royal_intersection(FlatLeaf(0.5))
    assert abs(z0 - (7 - 4 * math.sqrt(3))) < 1e-12
    zeta = 2 - math.sqrt(3)
    assert np.abs(np.array(point) - [2 * zeta, zeta ** 2]).max() < 1e-12
    assert bidisc.royal_intersection(FlatLeaf(0)) == (bidisc.royal(0), 0)


@given(disc_points(0.999))
def test_exactly_one_quadratic_root_in_disc(beta):
    quad = np.roots([np.conj(beta) ** 2, 2 * abs(beta) ** 2 - 4, beta ** 2]) if abs(beta) > 1e-6 else np.array([0, np.inf])
    inside = [r for r in quad if abs(r) < 1]
    assert len(inside) == 1
    point, z0 = bidisc.royal_intersection(FlatLeaf(beta))
    assert abs(z0 - inside[0]) < 1e-9
    assert bidisc.is_royal(point, 1e-12)
    assert np.abs(np.array(bidisc.leaf_point(FlatLeaf(beta), z0)) - np.array(point)).max() < 1e-12


def test_pseudo_param_examples():
    assert abs(bidisc.pseudo_param((0, 0.3)) - 0.3) < 1e-15
    assert abs(bidisc.poincare_param((0, 0.3)) - math.atanh(0.3)) < 1e-15
    assert bidisc.pseudo_param(bidisc.royal(0.4j)) < 1e-15


@given(g_points(), automorphisms())
def test_C_invariant_under_action(s, m):
    assert abs(bidisc.pseudo_param(action.gamma(m, s)) - bidisc.pseudo_param(s)) < 1e-10


@given(disc_points(0.95))
def test_canonical_leaf_embedding_base(alpha):
    g = bidisc.canonical_leaf_embedding(alpha)
    assert np.abs(np.array(g(alpha)) - np.array(bidisc.royal(alpha))).max() < 1e-12
