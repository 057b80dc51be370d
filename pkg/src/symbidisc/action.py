"""The action s -> gamma_m(s) of Aut D on G, its derivatives and orbit tangents."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from . import bidisc, mobius
from .bidisc import GPoint
from .mobius import DiscAutomorphism, LieTangent
from .numerics import RealSubspace, numeric_jacobian, real_span, svd_rank, to_real

# |s1^2 - 4 s2| below this, gamma_jacobian stops dividing by z - w
NEAR_ROYAL = 1e-4

INFINITE = math.inf


def gamma(m: DiscAutomorphism, s) -> GPoint:
    s = bidisc.require_interior(s)
    z, w = bidisc.roots(s)
    return bidisc.pi(m(z), m(w))


def eval_formula(s, r, alpha):
    """e_s(m_{r, alpha}) from the closed rational formula; broadcasts over numpy arrays."""
    s1, s2 = s
    ac = np.conj(alpha)
    den = 1 - ac * s1 + ac * ac * s2
    e = np.exp(1j * np.asarray(r))
    out1 = e * (-2 * alpha + (1 + np.abs(alpha) ** 2) * s1 - 2 * ac * s2) / den
    out2 = e * e * (alpha * alpha - alpha * s1 + s2) / den
    return out1, out2


def gamma_formula(m: DiscAutomorphism, s) -> np.ndarray:
    """gamma_m via eval_formula; smooth across the royal variety."""
    out = eval_formula(tuple(np.asarray(s, dtype=complex)), cmath.phase(m.omega), m.alpha)
    return np.array(out, dtype=complex)


def swap_automorphism(s) -> DiscAutomorphism:
    """The non-identity automorphism upsilon with gamma_upsilon(s) = s; it swaps the two roots."""
    s = bidisc.require_interior(s)
    if bidisc.is_royal(s):
        raise ValueError("royal points have an infinite stabilizer")
    z, w = bidisc.roots(s)
    bz = mobius.blaschke(z)
    h = DiscAutomorphism(-1.0, bz(w))
    return mobius.compose(mobius.inverse(bz), mobius.compose(h, bz))


def stabilizer_order(s, tol: float = bidisc.ROYAL_TOL):
    s = bidisc.require_interior(s)
    return INFINITE if bidisc.is_royal(s, tol) else 2


def _alpha_from_c(c: np.ndarray) -> np.ndarray:
    return c / np.sqrt(1 + np.abs(c) ** 2)


def fiber_search(s, grid: int = 20, tol: float = 1e-10, n_seeds: int = 40) -> list:
    """All m with gamma_m(s) = s found from a chart grid, refined by least squares.

    A sampling check, not a proof: seeds come from a grid x grid x grid lattice
    in (r, Re c, Im c) with alpha = c / sqrt(1 + |c|^2).
    """
    s = bidisc.require_interior(s)
    target = np.array(s, dtype=complex)
    rs = np.linspace(-math.pi, math.pi, grid, endpoint=False)
    cs = np.linspace(-3.0, 3.0, grid)
    R, X, Y = np.meshgrid(rs, cs, cs, indexing="ij")
    A = _alpha_from_c(X + 1j * Y)
    o1, o2 = eval_formula(tuple(target), R, A)
    err = np.abs(o1 - target[0]) + np.abs(o2 - target[1])
    order = np.argsort(err, axis=None)[:n_seeds]

    def resid(p):
        a = _alpha_from_c(p[1] + 1j * p[2])
        o = np.array(eval_formula(tuple(target), p[0], a)) - target
        return to_real(o)

    found: list = []
    for idx in order:
        i, j, k = np.unravel_index(idx, R.shape)
        sol = least_squares(resid, [R[i, j, k], X[i, j, k], Y[i, j, k]], xtol=1e-15, ftol=1e-15, gtol=1e-15)
        if np.linalg.norm(resid(sol.x)) > tol:
            continue
        m = mobius.chart_m(sol.x[0], complex(_alpha_from_c(sol.x[1] + 1j * sol.x[2])))
        if not any(m.close_to(f, 1e-6) for f in found):
            found.append(m)
    return found


def tangent_v(s, lt: LieTangent) -> np.ndarray:
    s1, s2 = bidisc.as_point(s)
    a = lt.a
    return (1j * lt.r * np.array([s1, 2 * s2])
            - a * np.array([2, s1])
            + np.conj(a) * np.array([s1 * s1 - 2 * s2, s1 * s2]))


def orbit_vectors(s) -> list:
    s1, s2 = bidisc.as_point(s)
    return [
        1j * np.array([s1, 2 * s2]),
        np.array([2 - s1 * s1 + 2 * s2, s1 - s1 * s2]),
        1j * np.array([2 + s1 * s1 - 2 * s2, s1 + s1 * s2]),
    ]


@dataclass(frozen=True, eq=False)
class OrbitTangentReport:
    subspace: RealSubspace
    rank: int
    spanning_vectors: list


def orbit_tangent(s, rank_tol: float = 1e-9) -> OrbitTangentReport:
    vecs = orbit_vectors(s)
    sub = real_span(vecs, rank_tol)
    return OrbitTangentReport(sub, sub.dim, vecs)


def formula_jacobian(m: DiscAutomorphism, s) -> np.ndarray:
    """Exact derivative of the rational closed form of gamma_m; valid on all of G."""
    s1, s2 = bidisc.as_point(s)
    a = m.alpha
    ac = a.conjugate()
    e = m.omega
    den = 1 - ac * s1 + ac * ac * s2
    n1 = -2 * a + (1 + abs(a) ** 2) * s1 - 2 * ac * s2
    n2 = a * a - a * s1 + s2
    return np.array([
        [e * ((1 + abs(a) ** 2) * den + ac * n1), e * (-2 * ac * den - ac * ac * n1)],
        [e * e * (-a * den + ac * n2), e * e * (den - ac * ac * n2)],
    ], dtype=complex) / den**2


def gamma_jacobian(m: DiscAutomorphism, s, method: str = "auto", step: float = 1e-5) -> np.ndarray:
    """Complex 2x2 derivative of gamma_m at s.

    auto: implicit differentiation through the roots off the royal variety,
    the exact derivative of the closed form near it. fd: central differences.
    """
    s = bidisc.require_interior(s)
    if method == "fd":
        return numeric_jacobian(lambda x: gamma_formula(m, x), np.array(s), step, cr_tol=np.inf).complex
    if method == "formula" or (method == "auto" and bidisc.royal_discriminant(s) <= NEAR_ROYAL):
        return formula_jacobian(m, s)
    if method not in ("auto", "roots"):
        raise ValueError(f"unknown jacobian method {method!r}")
    z, w = bidisc.roots(s)
    dz = np.array([z / (z - w), -1 / (z - w)])
    dw = np.array([w / (w - z), -1 / (w - z)])
    mz, mw = m(z), m(w)
    dmz, dmw = m.derivative(z), m.derivative(w)
    row1 = dmz * dz + dmw * dw
    row2 = dmz * mw * dz + mz * dmw * dw
    return np.array([row1, row2], dtype=complex)


def es_prime(s) -> np.ndarray:
    """Real 4x3 derivative of m -> gamma_m(s) at the identity, columns along LIE_BASIS."""
    return np.column_stack([to_real(tangent_v(s, lt)) for lt in mobius.LIE_BASIS])


def es_prime_pinv(s, rank_tol: float = 1e-9) -> np.ndarray:
    E = es_prime(s)
    if svd_rank(E, rank_tol) < 3:
        raise ValueError("e_s'(id) is not invertible at a royal point")
    return np.linalg.pinv(E)


def orbit_samples(s, grid: int, rng: np.random.Generator) -> list:
    """gamma_m(s) for m on a chart grid with a random phase offset."""
    s = bidisc.require_interior(s)
    shift = rng.uniform(0, 2 * math.pi / grid)
    rs = np.linspace(-math.pi, math.pi, grid, endpoint=False) + shift
    cs = np.linspace(-2.0, 2.0, grid)
    out = []
    for r in rs:
        for x in cs:
            for y in cs:
                a = complex(_alpha_from_c(x + 1j * y))
                o = eval_formula(tuple(s), r, a)
                out.append(GPoint(complex(o[0]), complex(o[1])))
    return out
