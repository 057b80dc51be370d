"""Points of symmetry: isolated fixed points of involutive automorphisms.

Covers the annulus A_q, the symmetrized bidisc and the tetrablock
E = {x in C^3 : 1 - x1 z - x2 w + x3 z w != 0 for |z|, |w| <= 1}.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from . import action, bidisc, mobius
from .numerics import as_cvec


class FixedKind(str, enum.Enum):
    ISOLATED = "IsolatedFixed"
    NON_ISOLATED = "NonIsolatedFixed"
    NOT_FIXED = "NotFixed"


class TetraPoint(NamedTuple):
    x1: complex
    x2: complex
    x3: complex


@dataclass(frozen=True)
class AnnulusParams:
    q: float

    def __post_init__(self):
        if not 0 < self.q < 1:
            raise ValueError("annulus needs 0 < q < 1")

    def contains(self, z: complex) -> bool:
        return self.q < abs(z) < 1 / self.q


@dataclass(frozen=True, eq=False)
class AnnulusSymmetry:
    is_symmetry_point: bool
    involution: Optional[Callable[[complex], complex]] = None
    fixed_points: tuple = ()

    def __bool__(self):
        return self.is_symmetry_point


def annulus_symmetry_point(q: float, z: complex, tol: float = 1e-12) -> AnnulusSymmetry:
    """True exactly on the unit circle; then zeta -> z^2/zeta is the certifying involution."""
    A = AnnulusParams(q)
    if not A.contains(z):
        raise ValueError(f"{z!r} is not in the annulus with q = {q}")
    if abs(abs(z) - 1) >= tol:
        return AnnulusSymmetry(False)
    z = complex(z)
    return AnnulusSymmetry(True, lambda zeta: z * z / zeta, (z, -z))


def tetra_contains(x, n: int = 64, margin: float = 1e-6) -> bool:
    """Approximate membership in the tetrablock, by sampling.

    For fixed z the expression is affine in w, so it has no zero with |w| <= 1
    iff |1 - x1 z| > |x2 - x3 z|. We require |x1| < 1 (the w = 0 slice) and
    test the inequality on an n-point circle and on n radial rings.
    """
    if n < 32:
        raise ValueError("tetra_contains needs n >= 32")
    x1, x2, x3 = (complex(c) for c in x)
    if not abs(x1) < 1 - margin:
        return False
    theta = np.linspace(0, 2 * math.pi, n, endpoint=False)
    radii = np.linspace(0, 1, n)
    Z = (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()
    gap = np.abs(1 - x1 * Z) - np.abs(x2 - x3 * Z)
    return bool(gap.min() > margin)


def tetra_leaf(beta1: complex, beta2: complex, z: complex) -> TetraPoint:
    if not abs(beta1) + abs(beta2) < 1:
        raise ValueError("tetrablock leaves need |beta1| + |beta2| < 1")
    if not abs(z) < 1:
        raise ValueError("z must lie in the disc")
    b1, b2 = complex(beta1), complex(beta2)
    return TetraPoint(b1 + b2.conjugate() * z, b2 + b1.conjugate() * z, complex(z))


@dataclass(frozen=True, eq=False)
class LinearMap:
    """A linear automorphism x -> M x of C^n."""

    matrix: np.ndarray
    label: str

    def __call__(self, x) -> np.ndarray:
        return self.matrix @ as_cvec(x)

    def is_involution(self, tol: float = 1e-12) -> bool:
        n = self.matrix.shape[0]
        return bool(np.abs(self.matrix @ self.matrix - np.eye(n)).max() < tol)


def tetra_diag(omega1: complex, omega2: complex) -> LinearMap:
    return LinearMap(np.diag([omega1, omega2, omega1 * omega2]).astype(complex), f"Diag({omega1},{omega2})")


def tetra_swap(omega: complex) -> LinearMap:
    w = complex(omega)
    M = np.array([[0, w.conjugate(), 0], [w, 0, 0], [0, 0, 1]], dtype=complex)
    return LinearMap(M, f"Swap({w})")


def tetra_origin_fixer(case: str, *params) -> LinearMap:
    if case == "Diag":
        return tetra_diag(*params)
    if case == "Swap":
        return tetra_swap(*params)
    raise ValueError(f"unknown origin-fixing family {case!r}")


def _jacobian(f: Callable, p: np.ndarray, step: float = 1e-6) -> np.ndarray:
    if isinstance(f, LinearMap):
        return f.matrix
    cols = []
    for j in range(p.size):
        e = np.zeros(p.size, dtype=complex)
        e[j] = step
        cols.append((as_cvec(f(p + e)) - as_cvec(f(p - e))) / (2 * step))
    return np.column_stack(cols)


@dataclass(frozen=True, eq=False)
class FixedSetReport:
    kind: FixedKind
    fixed_residual: float
    tangent_dim: int
    witness: Optional[np.ndarray] = None


def fixed_set_classify(f: Callable, p, tol: float = 1e-9, radius: float = 1e-3) -> FixedSetReport:
    """Classify p for the involution f.

    The fixed set of a holomorphic involution is a complex submanifold whose
    tangent at p is ker(f'(p) - I); a nonzero kernel vector k gives the
    witness p + radius*k, which must itself be fixed.
    """
    p = as_cvec(p)
    probes = [p] + [p + radius * u for u in np.eye(p.size)]
    if any(np.linalg.norm(as_cvec(f(as_cvec(f(x)))) - x) > tol for x in probes):
        raise ValueError("map is not an involution")
    res = float(np.linalg.norm(as_cvec(f(p)) - p))
    if res > tol:
        return FixedSetReport(FixedKind.NOT_FIXED, res, 0)
    J = _jacobian(f, p)
    _, sv, vt = np.linalg.svd(J - np.eye(p.size))
    kernel = vt.conj()[sv < 1e-6]
    if kernel.shape[0] == 0:
        return FixedSetReport(FixedKind.ISOLATED, res, 0)
    witness = p + radius * kernel[0]
    if np.linalg.norm(as_cvec(f(witness)) - witness) > max(tol, 10 * radius**2):
        return FixedSetReport(FixedKind.ISOLATED, res, kernel.shape[0])
    return FixedSetReport(FixedKind.NON_ISOLATED, res, kernel.shape[0], witness)


def fixed_subspace(M: np.ndarray) -> np.ndarray:
    """Orthonormal basis (rows) of ker(M - I)."""
    _, sv, vt = np.linalg.svd(M - np.eye(M.shape[0]))
    return vt.conj()[sv < 1e-12]


# Fixed sets of the four involutive Diag maps; columns mark which co-ordinates stay free.
DIAG_TABLE = {
    (1, 1): (True, True, True),
    (-1, 1): (False, True, False),
    (1, -1): (True, False, False),
    (-1, -1): (False, False, True),
}


def diag_table_matches() -> dict:
    out = {}
    for (w1, w2), free in DIAG_TABLE.items():
        K = fixed_subspace(tetra_diag(w1, w2).matrix)
        support = tuple(bool(np.abs(K[:, j]).max() > 1e-12) if K.size else False for j in range(3))
        out[(w1, w2)] = support == free
    return out


def g_involutions_fixing(s) -> list:
    """Involutive gamma_m fixing s: the identity and, off the royal variety, the swap."""
    s = bidisc.require_interior(s)
    out = []
    for m in action.fiber_search(s):
        if mobius.is_involution(m, 1e-9):
            out.append((m, lambda x, m=m: np.array(action.gamma(m, x))))
    return out


@dataclass
class SweepReport:
    domain: str
    rows: list = field(default_factory=list)

    @property
    def symmetry_points(self) -> list:
        return [r for r in self.rows if r["kind"] == FixedKind.ISOLATED]

    @property
    def passed(self) -> bool:
        return not self.symmetry_points


TETRA_SWAP_ANGLES = 16


def tetra_candidates() -> list:
    cands = [tetra_diag(w1, w2) for (w1, w2) in DIAG_TABLE]
    cands += [tetra_swap(cmath.exp(2j * math.pi * k / TETRA_SWAP_ANGLES)) for k in range(TETRA_SWAP_ANGLES)]
    return [c for c in cands if c.is_involution()]


def no_symmetry_sweep(domain: str, ps: Sequence[complex]) -> SweepReport:
    """Classify every involutive candidate at the orbit representatives (0, p) or (0, 0, p)."""
    rep = SweepReport(domain)
    for p in ps:
        if domain == "g":
            point = np.array([0, p], dtype=complex)
            if abs(p) == 0:
                # royal origin: the origin-fixing involutions are gamma of z -> z and z -> -z
                cands = [("identity", lambda x: as_cvec(x)),
                         ("gamma[-1,0]", lambda x: np.array(action.gamma(mobius.rotation(-1), x)))]
            else:
                cands = [(f"gamma[{m.omega:.3g},{m.alpha:.3g}]", f) for m, f in g_involutions_fixing(point)]
        elif domain == "tetrablock":
            point = np.array([0, 0, p], dtype=complex)
            cands = [(c.label, c) for c in tetra_candidates()]
        else:
            raise ValueError(f"unknown domain {domain!r}")
        for label, f in cands:
            r = fixed_set_classify(f, point)
            rep.rows.append({"p": p, "candidate": label, "kind": r.kind, "tangent_dim": r.tangent_dim})
    return rep
