import numpy as np
import pytest
from hypothesis import given, strategies as st

from symbidisc.numerics import (ComplexLine, Tolerances, complex_derivative, from_real, holomorphy_residual,
                                intersect, numeric_jacobian, projective_distance, real_span, svd_rank,
                                to_real, wirtinger)

cvec = st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=2, max_size=2)


@given(cvec)
def test_real_round_trip(v):
    assert np.allclose(from_real(to_real(v)), v)


def test_tolerances_reject_nonpositive():
    with pytest.raises(ValueError):
        Tolerances(eq_tol=0)
    with pytest.raises(ValueError):
        Tolerances(fd_step=-1e-5)


def test_real_span_dimensions():
    assert real_span([[1, 0], [1j, 0]]).dim == 2
    assert real_span([[1, 0], [2, 0]]).dim == 1
    assert real_span([[0, 0]]).dim == 0
    with pytest.raises(ValueError):
        real_span([])


def test_basis_orthonormal(rng):
    vecs = [rng.normal(size=2) + 1j * rng.normal(size=2) for _ in range(3)]
    U = real_span(vecs)
    assert U.dim == 3
    assert np.allclose(U.basis @ U.basis.T, np.eye(3), atol=1e-12)


def test_times_i_of_complex_line_is_itself():
    U = ComplexLine([1, 2j]).as_subspace()
    assert U.equals(U.times_i())


def test_intersection_of_real_and_imag_planes():
    U = real_span([[1, 0], [0, 1]])          # R^2 inside C^2
    V = real_span([[1, 0], [0, 1j]])
    W = intersect(U, V)
    assert W.dim == 1
    assert np.allclose(np.abs(from_real(W.basis[0])), [1, 0])


@given(cvec, st.complex_numbers(min_magnitude=0.1, max_magnitude=10, allow_nan=False, allow_infinity=False))
def test_complex_line_projective(v, c):
    v = np.asarray(v)
    if np.linalg.norm(v) < 1e-3:
        return
    assert ComplexLine(v).distance(ComplexLine(c * v)) < 1e-9
    assert projective_distance(v, c * v) < 1e-9


def test_complex_line_canonical_phase():
    L = ComplexLine([1j, 1j])
    assert np.allclose(L.direction, [1 / np.sqrt(2), 1 / np.sqrt(2)])
    with pytest.raises(ValueError):
        ComplexLine([0, 0])


def test_numeric_jacobian_holomorphic():
    f = lambda s: np.array([s[0] ** 2 * s[1], np.exp(s[0])])
    s = np.array([0.3 + 0.1j, -0.2j])
    J = numeric_jacobian(f, s)
    exact = np.array([[2 * s[0] * s[1], s[0] ** 2], [np.exp(s[0]), 0]])
    assert J.complex is not None
    assert np.abs(J.complex - exact).max() < 1e-9


def test_numeric_jacobian_flags_antiholomorphic():
    f = lambda s: np.array([np.conj(s[0]), s[1]])
    J = numeric_jacobian(f, np.array([0.1, 0.2]))
    assert J.complex is None
    assert J.cr_residual > 1


def test_wirtinger_of_conjugate():
    d, db = wirtinger(lambda v: np.array([np.conj(v[0]) * v[0]]), np.array([0.3 + 0.4j]))
    assert abs(d[0, 0] - (0.3 - 0.4j)) < 1e-9
    assert abs(db[0, 0] - (0.3 + 0.4j)) < 1e-9


def test_holomorphy_residual_and_derivative():
    assert holomorphy_residual(lambda s: s ** 3, np.array([0.2 + 0.1j, 0.5])) < 1e-9
    assert abs(complex_derivative(lambda z: np.array([z ** 2]), 0.5j)[0] - 1j) < 1e-9


def test_svd_rank():
    assert svd_rank(np.eye(3)) == 3
    assert svd_rank(np.zeros((2, 2))) == 0
    assert svd_rank([[1, 2], [2, 4]]) == 1
