import cmath
import math

import numpy as np
import pytest

from symbidisc import symmetry
from symbidisc.symmetry import FixedKind


def test_annulus_circle_points():
    for t in np.linspace(0, 2 * math.pi, 9):
        z = cmath.exp(1j * t)
        rep = symmetry.annulus_symmetry_point(0.5, z)
        assert rep
        assert abs(rep.involution(z) - z) < 1e-15
        w = 0.8 * cmath.exp(0.3j)
        assert abs(rep.involution(rep.involution(w)) - w) < 1e-14
        assert 0.5 < abs(rep.involution(w)) < 2


def test_annulus_off_circle():
    for z in (0.6, 0.9j, 1.2, -1.9, 1 + 1e-9):
        assert not symmetry.annulus_symmetry_point(0.5, z)
    with pytest.raises(ValueError):
        symmetry.annulus_symmetry_point(0.5, 0.3)
    with pytest.raises(ValueError):
        symmetry.AnnulusParams(1.5)


def test_tetra_contains():
    assert symmetry.tetra_contains((0, 0, 0))
    assert symmetry.tetra_contains((0, 0, 0.9))
    assert not symmetry.tetra_contains((0, 0, 1.1))
    assert not symmetry.tetra_contains((1.2, 0, 0))
    assert symmetry.tetra_contains(symmetry.tetra_leaf(0.3, 0.2j, 0.5))
    with pytest.raises(ValueError):
        symmetry.tetra_contains((0, 0, 0), n=8)
    with pytest.raises(ValueError):
        symmetry.tetra_leaf(0.6, 0.6, 0)


def test_tetra_maps():
    assert symmetry.tetra_diag(-1, 1).is_involution()
    assert not symmetry.tetra_diag(1j, 1).is_involution()
    for k in range(8):
        assert symmetry.tetra_swap(cmath.exp(0.7j * k)).is_involution()
    x = np.array([0.1, 0.2j, 0.3])
    assert np.allclose(symmetry.tetra_origin_fixer("Swap", 1)(x), [0.2j, 0.1, 0.3])
    with pytest.raises(ValueError):
        symmetry.tetra_origin_fixer("Rot")


def test_classify():
    p = np.array([0, 0, 0.4])
    assert symmetry.fixed_set_classify(symmetry.tetra_diag(1, 1), p).kind is FixedKind.NON_ISOLATED
    assert symmetry.fixed_set_classify(symmetry.tetra_diag(-1, -1), p).kind is FixedKind.NON_ISOLATED
    assert symmetry.fixed_set_classify(symmetry.tetra_diag(-1, 1), p).kind is FixedKind.NOT_FIXED
    assert symmetry.fixed_set_classify(lambda x: -x, np.zeros(2)).kind is FixedKind.ISOLATED
    with pytest.raises(ValueError):
        symmetry.fixed_set_classify(lambda x: 1j * x, np.zeros(2))


def test_diag_table():
    assert all(symmetry.diag_table_matches().values())
    assert len(symmetry.DIAG_TABLE) == 4


def test_g_involutions():
    invs = symmetry.g_involutions_fixing((0, 0.3))
    assert len(invs) == 2


@pytest.mark.parametrize("domain", ["g", "tetrablock"])
def test_no_symmetry_points(domain):
    ps = [0.0, 0.1, 0.5, 0.9] if domain == "g" else [0.1 * k for k in range(1, 10)]
    rep = symmetry.no_symmetry_sweep(domain, ps)
    assert rep.passed
    kinds = {r["kind"] for r in rep.rows}
    assert FixedKind.NON_ISOLATED in kinds and FixedKind.ISOLATED not in kinds
    with pytest.raises(ValueError):
        symmetry.no_symmetry_sweep("ball", [0.1])
