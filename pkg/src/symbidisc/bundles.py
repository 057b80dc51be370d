"""Sharp and flat direction line bundles on G."""

from __future__ import annotations

import numpy as np

from . import action, bidisc
from .mobius import DiscAutomorphism
from .numerics import ComplexLine, intersect, projective_distance


def sharp_numeric(s, tol: float = 1e-8) -> ComplexLine:
    """The complex line V(s) cap iV(s) inside the orbit tangent."""
    V = action.orbit_tangent(s).subspace
    W = intersect(V, V.times_i(), tol)
    if W.dim != 2:
        raise ValueError(f"V cap iV has real dimension {W.dim}, expected 2")
    return ComplexLine.from_subspace(W)


def sharp_closed(s) -> ComplexLine:
    s1, _ = bidisc.as_point(s)
    beta = bidisc.leaf_of(s).beta
    return ComplexLine([1.0, (beta - s1 / 2) / (1 - np.conj(beta) * s1 / 2)])


def flat_direction(s) -> ComplexLine:
    beta = bidisc.leaf_of(s).beta
    return ComplexLine([np.conj(beta), 1.0])


def _pushed_residual(m: DiscAutomorphism, s, line_of) -> float:
    J = action.gamma_jacobian(m, s)
    image = J @ line_of(s).direction
    return projective_distance(image, line_of(action.gamma(m, s)).direction)


def covariance_residual(m: DiscAutomorphism, s, numeric: bool = False) -> float:
    """Projective distance between gamma_m'(s) s-sharp and gamma_m(s)-sharp."""
    return _pushed_residual(m, s, sharp_numeric if numeric else sharp_closed)


def flat_covariance_residual(m: DiscAutomorphism, s) -> float:
    return _pushed_residual(m, s, flat_direction)


def direct_sum_check(s) -> float:
    """|det [sharp, flat]| with unit columns; zero would mean the lines coincide."""
    M = np.column_stack([sharp_closed(s).direction, flat_direction(s).direction])
    return float(abs(np.linalg.det(M)))
