"""Numerical toolkit for the symmetrized bidisc G = {(z + w, zw) : |z|, |w| < 1}."""

from .bidisc import GPoint, FlatLeaf, FlatCoordinates, Membership
from .mobius import DiscAutomorphism
from .numerics import ComplexLine, RealSubspace, Tolerances

__all__ = ["GPoint", "FlatLeaf", "FlatCoordinates", "Membership", "DiscAutomorphism",
           "ComplexLine", "RealSubspace", "Tolerances"]
