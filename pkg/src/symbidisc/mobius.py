"""Automorphisms of the unit disc, m(z) = omega (z - alpha) / (1 - conj(alpha) z)."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

U1 = "U1"
U2 = "U2"

# Returned by fixed_points for the identity.
WHOLE_DISC = "all of D"


@dataclass(frozen=True)
class DiscAutomorphism:
    omega: complex = 1.0 + 0j
    alpha: complex = 0j

    def __post_init__(self):
        omega = complex(self.omega)
        alpha = complex(self.alpha)
        if abs(abs(omega) - 1.0) > 1e-12:
            raise ValueError(f"|omega| must be 1, got {abs(omega)!r}")
        if not abs(alpha) < 1.0:
            raise ValueError(f"|alpha| must be < 1, got {abs(alpha)!r}")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "alpha", alpha)

    def __call__(self, z):
        return self.omega * (z - self.alpha) / (1 - np.conj(self.alpha) * z)

    def derivative(self, z):
        a = self.alpha
        return self.omega * (1 - abs(a) ** 2) / (1 - np.conj(a) * z) ** 2

    def matrix(self) -> np.ndarray:
        w, a = self.omega, self.alpha
        return np.array([[w, -w * a], [-np.conj(a), 1.0]], dtype=complex)

    @classmethod
    def from_matrix(cls, M) -> "DiscAutomorphism":
        (a, b), (c, d) = np.asarray(M, dtype=complex)
        alpha = -b / a
        ratio = a / d
        return cls(ratio / abs(ratio), alpha)

    def __matmul__(self, other: "DiscAutomorphism") -> "DiscAutomorphism":
        return compose(self, other)

    def is_identity(self, tol: float = 1e-12) -> bool:
        return abs(self.omega - 1) < tol and abs(self.alpha) < tol

    def close_to(self, other: "DiscAutomorphism", tol: float = 1e-9) -> bool:
        return abs(self.omega - other.omega) < tol and abs(self.alpha - other.alpha) < tol


def identity() -> DiscAutomorphism:
    return DiscAutomorphism()


def rotation(eta: complex) -> DiscAutomorphism:
    return DiscAutomorphism(eta, 0j)


def blaschke(alpha: complex) -> DiscAutomorphism:
    """B_alpha(z) = (z - alpha) / (1 - conj(alpha) z)."""
    return DiscAutomorphism(1.0, alpha)


def apply(m: DiscAutomorphism, z: complex) -> complex:
    if not abs(z) < 1:
        raise ValueError(f"point {z!r} is not in the open unit disc")
    return complex(m(z))


def compose(m1: DiscAutomorphism, m2: DiscAutomorphism) -> DiscAutomorphism:
    """m1 after m2."""
    return DiscAutomorphism.from_matrix(m1.matrix() @ m2.matrix())


def inverse(m: DiscAutomorphism) -> DiscAutomorphism:
    return DiscAutomorphism(np.conj(m.omega), -m.omega * m.alpha)


def m_from_chart(chart_id: str, r: float, alpha: complex) -> DiscAutomorphism:
    """The automorphism m_{r, alpha}(z) = e^{ir} (z - alpha) / (1 - conj(alpha) z)."""
    if chart_id == U1:
        if not -math.pi < r < math.pi:
            raise ValueError("chart U1 needs r in (-pi, pi)")
    elif chart_id == U2:
        if not 0 < r < 2 * math.pi:
            raise ValueError("chart U2 needs r in (0, 2 pi)")
    else:
        raise ValueError(f"unknown chart {chart_id!r}")
    return DiscAutomorphism(cmath.exp(1j * r), alpha)


def chart_of(m: DiscAutomorphism):
    r = cmath.phase(m.omega)
    if abs(abs(r) - math.pi) < 1e-15:
        return U2, math.pi, m.alpha
    return U1, r, m.alpha


def chart_m(r: float, alpha: complex) -> DiscAutomorphism:
    """m_{r, alpha} for any real r, without chart bookkeeping."""
    return DiscAutomorphism(cmath.exp(1j * r), alpha)


def pseudohyperbolic(z1, z2) -> float:
    return float(abs((z1 - z2) / (1 - np.conj(z2) * z1)))


def poincare(z1, z2) -> float:
    return float(np.arctanh(pseudohyperbolic(z1, z2)))


def conjugate_rotation(alpha_fix: complex, eta: complex) -> DiscAutomorphism:
    """The automorphism fixing alpha_fix whose derivative there is eta."""
    b = blaschke(alpha_fix)
    return compose(inverse(b), compose(rotation(eta), b))


def is_involution(m: DiscAutomorphism, tol: float = 1e-12) -> bool:
    return compose(m, m).is_identity(tol)


def fixed_points(m: DiscAutomorphism, tol: float = 1e-12):
    """Fixed points in the closed disc, or WHOLE_DISC for the identity."""
    if m.is_identity(tol):
        return WHOLE_DISC
    w, a = m.omega, m.alpha
    # conj(a) z^2 + (w - 1) z - w a = 0
    if abs(a) < tol:
        return (0j,)
    roots = np.roots([np.conj(a), w - 1, -w * a])
    return tuple(complex(z) for z in roots if abs(z) <= 1 + 1e-9)


def inner_automorphism(b: DiscAutomorphism, m: DiscAutomorphism) -> DiscAutomorphism:
    """I_b(m) = b o m o b^{-1}."""
    return compose(b, compose(m, inverse(b)))


@dataclass(frozen=True)
class LieTangent:
    """Tangent vector at the identity, in the chart coordinates (r, alpha)."""

    r: float = 0.0
    a: complex = 0j

    def curve(self, t: float) -> DiscAutomorphism:
        return chart_m(t * self.r, t * self.a)

    def disc_field(self, z):
        """d/dt m_{tr, ta}(z) at t = 0."""
        return 1j * self.r * z - self.a + np.conj(self.a) * z * z


LIE_BASIS: Sequence[LieTangent] = (LieTangent(1.0, 0j), LieTangent(0.0, 1 + 0j), LieTangent(0.0, 1j))


def random_automorphism(rng: np.random.Generator, max_alpha: float = 0.9) -> DiscAutomorphism:
    r = rng.uniform(-math.pi, math.pi)
    alpha = max_alpha * math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform())
    return chart_m(r, alpha)


def random_disc_point(rng: np.random.Generator, radius: float = 0.9) -> complex:
    return radius * math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform())
