"""Constructive biholomorphism Lambda : G -> Omega.

Base normalization: z0 = 0, s0 = (0, 0) and g(z) = (0, z). For s in G,
alpha(s) moves s onto the leaf F^0 via L(s) = gamma_{B_alpha}^{-1}(s), and

    Lambda(s) = theta(B_{alpha(s)})(f(L(s)_2)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import action, bidisc, mobius
from .bidisc import GPoint
from .bundles import flat_direction, sharp_closed
from .numerics import as_cvec, holomorphy_residual, numeric_jacobian, projective_distance
from .royal import ConcomitantPair, ManifoldInstance, manifold_flat, manifold_sharp

LEAF_CHECK_POINTS = (0j, 0.3, -0.5j, 0.6 + 0.2j, -0.7)


def alpha_of(s) -> complex:
    beta = bidisc.leaf_of(s).beta
    return -beta / (1 + math.sqrt(1 - abs(beta) ** 2))


def L_of(s) -> GPoint:
    s1, s2 = bidisc.as_point(s)
    a = alpha_of(s)
    ac = a.conjugate()
    return GPoint(0j, (s2 + a * s1 + a * a) / (1 + ac * s1 + ac * ac * s2))


def build_lambda(instance: ManifoldInstance, pair: ConcomitantPair,
                 f: Callable[[complex], np.ndarray], check: bool = True,
                 tol: float = 1e-8) -> Callable:
    """Lambda from the pair and a leaf embedding f of the disc onto E_{d(0)}.

    f(0) = d(0) is assumed. With check=True, f is pulled back to G and
    rejected unless it lands on the leaf F^0.
    """
    if check:
        worst = max(abs(instance.pullback(f(z)).s1) for z in LEAF_CHECK_POINTS)
        if worst > tol:
            raise ValueError(f"f leaves the fibre E_d(0) (pullback residual {worst:.3g})")

    def lam(s):
        s = bidisc.as_point(s)
        z = L_of(s).s2
        return as_cvec(pair.theta(mobius.blaschke(alpha_of(s)))(f(z)))

    return lam


@dataclass
class LambdaReport:
    residuals: dict = field(default_factory=dict)
    thresholds: dict = field(default_factory=dict)

    def add(self, name: str, value: float, threshold: float):
        self.residuals[name] = max(float(value), self.residuals.get(name, 0.0))
        self.thresholds[name] = threshold

    def ok(self, name: str) -> bool:
        if name == "injectivity":
            return self.residuals[name] > self.thresholds[name]
        return self.residuals[name] < self.thresholds[name]

    @property
    def flags(self) -> dict:
        return {k: self.ok(k) for k in self.residuals}

    @property
    def passed(self) -> bool:
        return all(self.flags.values())


def verify_lambda(lam: Callable, instance: ManifoldInstance, pair: ConcomitantPair,
                  samples: Sequence, rng: np.random.Generator, holo_step: float = 1e-4) -> LambdaReport:
    """Checks (a) holomorphy, (b) injectivity, (c) equivariance, (d) Lambda o R = d,
    (e) leaves to leaves and (f) sharp/flat transport, plus deviation from instance.forward."""
    rep = LambdaReport()
    pts = [bidisc.as_point(s) for s in samples]
    values = [lam(s) for s in pts]
    rep.add("deviation", max(np.linalg.norm(v - instance.forward(np.array(s))) for s, v in zip(pts, values)), 1e-8)
    rep.add("holomorphy", max(holomorphy_residual(lam, np.array(s), holo_step) for s in pts), 1e-5)

    # smallest |Lambda(s) - Lambda(t)| / |s - t| over sample pairs
    V = np.array(values)
    S = np.array(pts, dtype=complex)
    ratio = math.inf
    for i in range(len(pts)):
        ds = np.linalg.norm(S[i + 1:] - S[i], axis=1)
        dv = np.linalg.norm(V[i + 1:] - V[i], axis=1)
        keep = ds > 1e-12
        if keep.any():
            ratio = min(ratio, float((dv[keep] / ds[keep]).min()))
    rep.residuals["injectivity"] = ratio
    rep.thresholds["injectivity"] = 1e-6

    for s in pts:
        m = mobius.random_automorphism(rng)
        rep.add("equivariance", np.linalg.norm(lam(action.gamma(m, s)) - pair.theta(m)(lam(s))), 1e-9)

        z = mobius.random_disc_point(rng)
        rep.add("royal", np.linalg.norm(lam(bidisc.royal(z)) - pair.d(z)), 1e-9)

        leaf = bidisc.leaf_of(bidisc.royal(z))
        w = mobius.random_disc_point(rng)
        image = lam(bidisc.leaf_point(leaf, w))
        rep.add("leaves", abs(bidisc.leaf_of(instance.pullback(image)).beta - leaf.beta), 1e-9)

    for s in pts[: min(len(pts), 20)]:
        if bidisc.royal_discriminant(s) < 1e-3:
            continue
        J = numeric_jacobian(lam, np.array(s), 1e-5, cr_tol=math.inf).complex
        mu = lam(s)
        rep.add("sharp_transport", projective_distance(J @ sharp_closed(s).direction,
                                                       manifold_sharp(pair, mu).direction), 1e-5)
        rep.add("flat_transport", projective_distance(J @ flat_direction(s).direction,
                                                      manifold_flat(instance, mu).direction), 1e-5)
    return rep


def well_definedness_residual(lam: Callable, pair: ConcomitantPair, f: Callable, s) -> float:
    """Lambda(s) computed through the two factorizations s = gamma_k(0, q) and s = gamma_{k o upsilon}(0, q)."""
    s = bidisc.as_point(s)
    a = alpha_of(s)
    q = L_of(s).s2
    k = mobius.blaschke(a)
    direct = as_cvec(pair.theta(k)(f(q)))
    base = GPoint(0j, q)
    if bidisc.is_royal(base):
        return float(np.linalg.norm(direct - lam(s)))
    ups = action.swap_automorphism(base)
    other = as_cvec(pair.theta(mobius.compose(k, ups))(f(q)))
    return float(max(np.linalg.norm(direct - other), np.linalg.norm(direct - lam(s))))


def sample_points(rng: np.random.Generator, n: int, radius: float = 0.9) -> list:
    """Random interior points with a few forced near-royal and near-crossing ones."""
    pts = [bidisc.random_point(rng, radius) for _ in range(n)]
    for k in range(min(5, n)):
        zeta = mobius.random_disc_point(rng, 0.8)
        r = bidisc.royal(zeta)
        pts[k] = GPoint(r.s1, r.s2 + 1e-3 * (1 + 1j) / math.sqrt(2))
    return pts
