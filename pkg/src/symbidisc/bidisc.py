"""The symmetrized bidisc G = {(z + w, z w) : |z|, |w| < 1}.

Royal variety, flat leaves F^beta = {(beta + conj(beta) z, z)}, flat
co-ordinates and the leaf-internal distance parameters C and P.
"""

from __future__ import annotations

import cmath
import enum
import math
from typing import NamedTuple

import numpy as np

from . import mobius

BOUNDARY_TOL = 1e-10
ROYAL_TOL = 1e-9


class GPoint(NamedTuple):
    s1: complex
    s2: complex


class FlatLeaf(NamedTuple):
    beta: complex

    def point(self, z: complex) -> GPoint:
        return leaf_point(self, z)


class FlatCoordinates(NamedTuple):
    beta: complex
    z: complex


class Membership(str, enum.Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


def as_point(s) -> GPoint:
    s1, s2 = s
    return GPoint(complex(s1), complex(s2))


def pi(z: complex, w: complex) -> GPoint:
    return GPoint(complex(z + w), complex(z * w))


def roots(s) -> tuple:
    """Roots of x^2 - s1 x + s2, sorted by (Re, Im) for determinism."""
    s1, s2 = as_point(s)
    sq = cmath.sqrt(s1 * s1 - 4 * s2)
    # pick the sign that avoids cancellation, then use the product for the other root
    if (s1.conjugate() * sq).real >= 0:
        q = (s1 + sq) / 2
    else:
        q = (s1 - sq) / 2
    if q == 0:
        return (0j, 0j)
    pair = (q, s2 / q)
    return tuple(sorted(pair, key=lambda c: (c.real, c.imag)))


def contains(s, tol: float = BOUNDARY_TOL) -> Membership:
    radius = max(abs(r) for r in roots(s))
    if radius < 1 - tol:
        return Membership.INTERIOR
    if radius <= 1 + tol:
        return Membership.BOUNDARY
    return Membership.OUTSIDE


def require_interior(s) -> GPoint:
    s = as_point(s)
    if contains(s) is not Membership.INTERIOR:
        raise ValueError(f"{s} is not an interior point of G")
    return s


def royal(zeta: complex) -> GPoint:
    return GPoint(complex(2 * zeta), complex(zeta * zeta))


def royal_discriminant(s) -> float:
    s1, s2 = as_point(s)
    return abs(s1 * s1 - 4 * s2)


def is_royal(s, tol: float = ROYAL_TOL) -> bool:
    return royal_discriminant(s) < tol


def royal_param(s, tol: float = ROYAL_TOL) -> complex:
    if not is_royal(s, tol):
        raise ValueError(f"{s} is not on the royal variety")
    return as_point(s).s1 / 2


def leaf_of(s) -> FlatLeaf:
    s1, s2 = as_point(s)
    if not abs(s2) < 1:
        raise ValueError("leaf_of needs |s2| < 1")
    return FlatLeaf((s1 - s1.conjugate() * s2) / (1 - abs(s2) ** 2))


def leaf_point(leaf, z: complex) -> GPoint:
    beta = leaf.beta if isinstance(leaf, FlatLeaf) else complex(leaf)
    return GPoint(beta + beta.conjugate() * z, complex(z))


def flat_coords(s) -> FlatCoordinates:
    return FlatCoordinates(leaf_of(s).beta, as_point(s).s2)


def from_flat_coords(fc) -> GPoint:
    beta, z = fc
    return leaf_point(FlatLeaf(complex(beta)), z)


def royal_intersection(leaf) -> tuple:
    """The single royal point on a leaf, with its leaf co-ordinate z0.

    z0 is the root inside the disc of conj(beta)^2 z^2 + (2|beta|^2 - 4) z + beta^2;
    the other root has modulus 1/|z0|.
    """
    beta = leaf.beta if isinstance(leaf, FlatLeaf) else complex(leaf)
    b2 = abs(beta) ** 2
    big = 2 - b2 + 2 * math.sqrt(1 - b2)
    z0 = beta * beta / big
    zeta = beta / (1 + math.sqrt(1 - b2))
    return royal(zeta), z0


def pseudo_param(s) -> float:
    s = as_point(s)
    _, z0 = royal_intersection(leaf_of(s))
    return mobius.pseudohyperbolic(s.s2, z0)


def poincare_param(s) -> float:
    return float(np.arctanh(pseudo_param(s)))


def canonical_leaf_embedding(alpha: complex):
    """An embedding g of the disc onto the leaf through royal(alpha) with g(alpha) = royal(alpha).

    g = leaf_point(beta, .) o B_{-alpha^2} o B_alpha.
    """
    leaf = leaf_of(royal(alpha))
    b = mobius.compose(mobius.blaschke(-alpha * alpha), mobius.blaschke(alpha))

    def g(zeta):
        return leaf_point(leaf, complex(b(zeta)))

    return g


def random_point(rng: np.random.Generator, radius: float = 0.9) -> GPoint:
    return pi(mobius.random_disc_point(rng, radius), mobius.random_disc_point(rng, radius))


def random_royal(rng: np.random.Generator, radius: float = 0.9) -> GPoint:
    return royal(mobius.random_disc_point(rng, radius))
