"""Low-level numerics shared by every module.

Points of C^n are identified with R^{2n} through
(Re z_1, Im z_1, Re z_2, Im z_2, ...). Multiplication by i acts on each
(Re, Im) pair by the rotation (x, y) -> (-y, x).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

Evaluator = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Tolerances:
    eq_tol: float = 1e-9
    fd_step: float = 1e-5
    rank_tol: float = 1e-9

    def __post_init__(self):
        for name in ("eq_tol", "fd_step", "rank_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")


DEFAULT_TOL = Tolerances()


def to_real(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex).ravel()
    out = np.empty(2 * v.size)
    out[0::2] = v.real
    out[1::2] = v.imag
    return out


def from_real(x) -> np.ndarray:
    x = np.asarray(x, dtype=float).ravel()
    return x[0::2] + 1j * x[1::2]


def as_cvec(v) -> np.ndarray:
    return np.asarray(v, dtype=complex).ravel()


@dataclass(frozen=True, eq=False)
class RealSubspace:
    """Real-linear subspace of C^n, stored as orthonormal rows in R^{2n}."""

    basis: np.ndarray
    ambient: int = 4

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    def projector(self) -> np.ndarray:
        return self.basis.T @ self.basis

    def complement_projector(self) -> np.ndarray:
        return np.eye(self.ambient) - self.projector()

    def times_i(self) -> "RealSubspace":
        if self.dim == 0:
            return self
        return RealSubspace(_rotate_i(self.basis), self.ambient)

    def residual(self, v) -> float:
        """Distance from a (complex) vector to the subspace."""
        x = to_real(v)
        return float(np.linalg.norm(x - self.projector() @ x))

    def contains(self, other: "RealSubspace", tol: float = 1e-10) -> bool:
        if other.dim == 0:
            return True
        err = other.basis @ self.complement_projector()
        return float(np.abs(err).max()) < tol

    def equals(self, other: "RealSubspace", tol: float = 1e-10) -> bool:
        return self.dim == other.dim and self.contains(other, tol) and other.contains(self, tol)

    def complex_vectors(self) -> list:
        return [from_real(b) for b in self.basis]


def _rotate_i(rows: np.ndarray) -> np.ndarray:
    out = np.empty_like(rows)
    out[:, 0::2] = -rows[:, 1::2]
    out[:, 1::2] = rows[:, 0::2]
    return out


def real_span(vectors, rank_tol: float = DEFAULT_TOL.rank_tol) -> RealSubspace:
    rows = np.array([to_real(v) for v in vectors])
    if rows.size == 0:
        raise ValueError("real_span needs at least one vector")
    ambient = rows.shape[1]
    _, sv, vt = np.linalg.svd(rows)
    if sv.size == 0 or sv[0] == 0.0:
        return RealSubspace(np.zeros((0, ambient)), ambient)
    rank = int(np.sum(sv > rank_tol * sv[0]))
    return RealSubspace(vt[:rank].copy(), ambient)


def intersect(U: RealSubspace, V: RealSubspace, tol: float = 1e-8) -> RealSubspace:
    """Intersection as the common null space of both complement projectors."""
    if U.ambient != V.ambient:
        raise ValueError("subspaces live in different ambient spaces")
    stacked = np.vstack([U.complement_projector(), V.complement_projector()])
    _, sv, vt = np.linalg.svd(stacked)
    null = vt[sv < tol]
    return RealSubspace(null.copy(), U.ambient)


@dataclass(frozen=True, eq=False)
class ComplexLine:
    """A complex line through the origin, kept in canonical projective form."""

    direction: np.ndarray = field()

    def __post_init__(self):
        v = as_cvec(self.direction)
        norm = np.linalg.norm(v)
        if norm == 0.0:
            raise ValueError("a complex line needs a nonzero direction")
        v = v / norm
        lead = np.flatnonzero(np.abs(v) > 1e-12)[0]
        v = v * (abs(v[lead]) / v[lead])
        object.__setattr__(self, "direction", v)

    def distance(self, other: "ComplexLine") -> float:
        v1, v2 = self.direction, other.direction
        return float(np.linalg.norm(v1 - np.vdot(v2, v1) * v2))

    def contains(self, v, tol: float = 1e-8) -> bool:
        v = as_cvec(v)
        n = np.linalg.norm(v)
        return n == 0.0 or self.distance(ComplexLine(v)) < tol

    def as_subspace(self) -> RealSubspace:
        return real_span([self.direction, 1j * self.direction])

    @classmethod
    def from_subspace(cls, U: RealSubspace) -> "ComplexLine":
        if U.dim == 0:
            raise ValueError("empty subspace has no complex span")
        return cls(from_real(U.basis[0]))


def complex_lines_equal(L1: ComplexLine, L2: ComplexLine, tol: float = 1e-8) -> bool:
    return L1.distance(L2) < tol


def projective_distance(u, v) -> float:
    return ComplexLine(u).distance(ComplexLine(v))


@dataclass(frozen=True, eq=False)
class Jacobian:
    real: np.ndarray
    cr_residual: float
    complex: Optional[np.ndarray]


def _partials(f: Evaluator, s, step: float):
    """Central differences of f along each real and imaginary axis."""
    s = as_cvec(s)
    dx, dy = [], []
    for j in range(s.size):
        e = np.zeros(s.size, dtype=complex)
        e[j] = step
        dx.append((as_cvec(f(s + e)) - as_cvec(f(s - e))) / (2 * step))
        dy.append((as_cvec(f(s + 1j * e)) - as_cvec(f(s - 1j * e))) / (2 * step))
    return np.array(dx).T, np.array(dy).T


def numeric_jacobian(f: Evaluator, s, step: float = DEFAULT_TOL.fd_step,
                     cr_tol: Optional[float] = None) -> Jacobian:
    """Real Jacobian of f at s, plus the complex one when f looks holomorphic there.

    The Cauchy-Riemann gate defaults to 10*step**2 scaled by max(1, |J|).
    """
    dx, dy = _partials(f, s, step)
    n_out, n_in = dx.shape
    real = np.empty((2 * n_out, 2 * n_in))
    real[0::2, 0::2] = dx.real
    real[1::2, 0::2] = dx.imag
    real[0::2, 1::2] = dy.real
    real[1::2, 1::2] = dy.imag
    residual = float(np.abs(dy - 1j * dx).max())
    if cr_tol is None:
        cr_tol = 10 * step**2 * max(1.0, float(np.abs(dx).max()))
    return Jacobian(real, residual, dx if residual < cr_tol else None)


def holomorphy_residual(f: Evaluator, s, step: float = DEFAULT_TOL.fd_step) -> float:
    dx, dy = _partials(f, s, step)
    return float(np.linalg.norm(dx - dy / 1j, axis=0).max())


def wirtinger(f: Evaluator, s, step: float = DEFAULT_TOL.fd_step):
    """Return (df/dz_j, df/dzbar_j) as columns, one column per input coordinate."""
    dx, dy = _partials(f, s, step)
    return 0.5 * (dx - 1j * dy), 0.5 * (dx + 1j * dy)


def complex_derivative(f: Callable[[complex], np.ndarray], z: complex,
                       step: float = DEFAULT_TOL.fd_step) -> np.ndarray:
    """d/dz of a holomorphic map from the disc, by central differences along Re z."""
    return (as_cvec(f(z + step)) - as_cvec(f(z - step))) / (2 * step)


def svd_rank(matrix, rank_tol: float = DEFAULT_TOL.rank_tol) -> int:
    sv = np.linalg.svd(np.asarray(matrix), compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.sum(sv > rank_tol * sv[0]))
