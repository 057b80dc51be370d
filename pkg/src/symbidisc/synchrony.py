"""Synchrony (eigenvalues eta and eta^2, double-speed leaf action) and the
sharp-action o(t) condition."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import action, bidisc, bundles, mobius
from .mobius import DiscAutomorphism
from .lambda_builder import L_of, alpha_of
from .numerics import as_cvec, from_real, projective_distance, to_real
from .royal import (IDENTITY, ConcomitantPair, ManifoldInstance, consistent_pair, eval_derivative,
                    make_instance, manifold_C, manifold_sharp, reparametrized_pair)

SLOPE_THRESHOLD = 1.8


@dataclass(frozen=True)
class SynchronyReport:
    royal_eigenvalue: complex
    flat_eigenvalue: complex
    eta: complex
    residual_royal: float
    residual_flat: float

    def valid(self, tol: float = 1e-7) -> bool:
        return self.residual_royal < tol and self.residual_flat < tol


def _eigen_residual(J: np.ndarray, v: np.ndarray, target: complex):
    v = v / np.linalg.norm(v)
    Jv = J @ v
    lam = complex(np.vdot(v, Jv))
    return lam, float(np.linalg.norm(Jv - target * v))


def royal_eigencheck(alpha_fix: complex, eta: complex, method: str = "auto") -> SynchronyReport:
    """Derivative of gamma_m at royal(alpha) for m fixing alpha with m'(alpha) = eta.

    Royal direction (1, alpha) should scale by eta, flat direction (2 conj(alpha), 1 + |alpha|^2) by eta^2.
    """
    m = mobius.conjugate_rotation(alpha_fix, eta)
    J = action.gamma_jacobian(m, bidisc.royal(alpha_fix), method)
    a = complex(alpha_fix)
    lam_r, res_r = _eigen_residual(J, np.array([1, a]), eta)
    lam_f, res_f = _eigen_residual(J, np.array([2 * a.conjugate(), 1 + abs(a) ** 2]), eta * eta)
    return SynchronyReport(lam_r, lam_f, complex(eta), res_r, res_f)


def leaf_double_speed_residual(alpha_fix: complex, eta: complex, zetas: Sequence[complex],
                               c: Optional[DiscAutomorphism] = None) -> float:
    """max |gamma_m(g(zeta)) - g(m(m(zeta)))| with g the canonical leaf embedding, optionally g o c."""
    m = mobius.conjugate_rotation(alpha_fix, eta)
    g0 = bidisc.canonical_leaf_embedding(alpha_fix)
    g = g0 if c is None else (lambda z: g0(c(z)))
    worst = 0.0
    for zeta in zetas:
        lhs = np.array(action.gamma(m, g(zeta)))
        rhs = np.array(g(m(m(zeta))))
        worst = max(worst, float(np.linalg.norm(lhs - rhs)))
    return worst


def adapted_automorphism(instance: ManifoldInstance, mu) -> DiscAutomorphism:
    """k with gamma_k(0, C) = s, where s is the pullback of mu and C = C(s).

    k = B_{alpha(s)} o rho_theta with theta^2 the phase of the leaf co-ordinate of L(s).
    """
    s = instance.pullback(mu)
    q = L_of(s)[1]
    theta = cmath.exp(0.5j * cmath.phase(q)) if q != 0 else 1.0
    return mobius.compose(mobius.blaschke(alpha_of(s)), mobius.rotation(theta))


def _pair_at(instance, pair, mu, adapted):
    if not adapted:
        return pair
    return reparametrized_pair(pair, adapted_automorphism(instance, mu))


def sharp_action_residual(instance: ManifoldInstance, pair: ConcomitantPair, mu, t: float,
                          adapted: bool = True) -> np.ndarray:
    """e^{2P(mu)} (theta(B_{it})(mu) - mu) - i (theta(B_t)(mu) - mu), chart = ambient identity.

    With adapted=True the concomitant pair is first re-based by the inner
    automorphism of adapted_automorphism, so mu sits over (0, C) with C >= 0.
    """
    mu = as_cvec(mu)
    if bidisc.is_royal(instance.pullback(mu), 1e-12):
        raise ValueError("sharp action is tested off the royal disc")
    if t == 0:
        return np.zeros(2, dtype=complex)
    p = _pair_at(instance, pair, mu, adapted)
    C = manifold_C(instance, mu)
    e2p = (1 + C) / (1 - C)
    a = as_cvec(p.theta(mobius.blaschke(1j * t))(mu)) - mu
    b = as_cvec(p.theta(mobius.blaschke(t))(mu)) - mu
    return e2p * a - 1j * b


@dataclass
class SharpnessReport:
    t_values: list
    residual_norms: list
    fitted_slope: float
    floor: float = 1e-13
    threshold: float = SLOPE_THRESHOLD

    def __post_init__(self):
        if len(self.t_values) != len(self.residual_norms) or len(self.t_values) < 3:
            raise ValueError("need at least three matching t values and residuals")
        if any(b >= a for a, b in zip(self.t_values, self.t_values[1:])):
            raise ValueError("t values must be strictly decreasing")

    @property
    def passed(self) -> bool:
        return self.fitted_slope >= self.threshold or max(self.residual_norms) < self.floor


def sharp_action_order(instance: ManifoldInstance, pair: ConcomitantPair, mu,
                       t_list: Sequence[float] = (1e-2, 1e-3, 1e-4), adapted: bool = True,
                       floor: float = 1e-13) -> SharpnessReport:
    """Log-log slope of |residual| against t. Residuals under `floor` are clipped to it."""
    norms = [float(np.linalg.norm(sharp_action_residual(instance, pair, mu, t, adapted))) for t in t_list]
    clipped = np.maximum(norms, floor)
    slope = float(np.polyfit(np.log(t_list), np.log(clipped), 1)[0])
    return SharpnessReport(list(t_list), norms, slope, floor)


@dataclass
class TransportReport:
    linearity_residual: float
    sharp_residual: float
    tol: float = 1e-6
    matrix: np.ndarray = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return self.linearity_residual < self.tol and self.sharp_residual < self.tol


def transported_linearity_check(instance: ManifoldInstance, pair: ConcomitantPair, s, mu,
                                adapted: bool = True) -> TransportReport:
    """X = e_mu'(id) e_s'(id)^{-1} should carry s-sharp complex-linearly onto mu-sharp.

    Both evaluation maps are taken with their pairs adapted at the respective base points.
    """
    s = bidisc.as_point(s)
    if bidisc.is_royal(s):
        raise ValueError("s must lie off the royal variety")
    mu = as_cvec(mu)
    if abs(manifold_C(instance, mu) - bidisc.pseudo_param(s)) > 1e-8:
        raise ValueError("C(mu) and C(s) differ")
    g_inst = make_instance(IDENTITY)
    g_pair = _pair_at(g_inst, consistent_pair(g_inst), np.array(s), adapted)
    E_s = eval_derivative(g_pair, np.array(s))
    E_mu = eval_derivative(_pair_at(instance, pair, mu, adapted), mu)
    X = E_mu @ np.linalg.pinv(E_s)
    v = bundles.sharp_closed(s).direction
    xv = from_real(X @ to_real(v))
    xiv = from_real(X @ to_real(1j * v))
    lin = float(np.linalg.norm(xiv - 1j * xv) / max(np.linalg.norm(xv), 1e-300))
    target = manifold_sharp(_pair_at(instance, pair, mu, adapted), mu)
    sharp = max(projective_distance(xv, target.direction), projective_distance(xiv, target.direction))
    return TransportReport(lin, sharp, matrix=X)
