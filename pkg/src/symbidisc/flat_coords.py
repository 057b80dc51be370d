"""Flat co-ordinates eta(beta, z) = (beta + conj(beta) z, z) and the PDE test for holomorphy.

A map F on G is pulled back to Xi = F o eta on the bidisc. F is holomorphic
exactly when

    dXi/d(conj beta) = z dXi/d(beta)   and   dXi/d(conj z) = 0.

Wirtinger derivatives use d/d(conj x) = (d/dRe x + i d/dIm x) / 2 with central differences.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.spatial import cKDTree

from . import action, bidisc, mobius
from .numerics import as_cvec, holomorphy_residual, wirtinger

PDE_TOL = 1e-5
PDE_STEP = 1e-4


@dataclass(frozen=True, eq=False)
class FlatChartMap:
    sampler: Callable[[complex, complex], np.ndarray]
    label: str = ""

    def __call__(self, beta, z) -> np.ndarray:
        return as_cvec(self.sampler(beta, z))


def lift(F: Callable, label: str = "") -> FlatChartMap:
    return FlatChartMap(lambda beta, z: F(np.array(bidisc.from_flat_coords((beta, z)))), label)


def descend(Xi: FlatChartMap) -> Callable:
    def F(s):
        beta, z = bidisc.flat_coords(as_cvec(s))
        return Xi(beta, z)
    return F


def _xi_vec(Xi: FlatChartMap):
    return lambda v: Xi(v[0], v[1])


def chain_rule_residuals(F: Callable, beta: complex, z: complex, step: float = PDE_STEP) -> dict:
    """Wirtinger derivatives of xi = F o eta against their chain-rule expressions in F's derivatives."""
    Xi = lift(F)
    dxi, dxi_bar = wirtinger(_xi_vec(Xi), np.array([beta, z]), step)
    s = np.array(bidisc.from_flat_coords((beta, z)))
    dF, dF_bar = wirtinger(F, s, step)
    Fs, Fp = dF[:, 0], dF[:, 1]
    Fsb, Fpb = dF_bar[:, 0], dF_bar[:, 1]
    bc, zc = np.conj(beta), np.conj(z)
    expected = {
        "d_beta": (dxi[:, 0], Fs + zc * Fsb),
        "d_beta_bar": (dxi_bar[:, 0], z * Fs + Fsb),
        "d_z": (dxi[:, 1], bc * Fs + Fp),
        "d_z_bar": (dxi_bar[:, 1], beta * Fsb + Fpb),
    }
    return {k: float(np.abs(a - b).max()) for k, (a, b) in expected.items()}


@dataclass
class PDEReport:
    beta_residual: float
    z_residual: float
    tol: float = PDE_TOL

    @property
    def passed(self) -> bool:
        return self.beta_residual < self.tol and self.z_residual < self.tol


def default_grid(n: int = 5, radius: float = 0.7) -> list:
    """n x n polar-ish samples of the bidisc, well inside the stencil margin."""
    rng = np.random.default_rng(12345)
    return [(mobius.random_disc_point(rng, radius), mobius.random_disc_point(rng, radius)) for _ in range(n * n)]


def _check_margin(grid, step):
    for beta, z in grid:
        if max(abs(beta), abs(z)) > 1 - 2 * step:
            raise ValueError("grid point too close to the boundary of the bidisc for the stencil")


def pde_check(Xi: FlatChartMap, grid: Optional[Sequence] = None, step: float = PDE_STEP) -> PDEReport:
    grid = default_grid() if grid is None else grid
    _check_margin(grid, step)
    f = _xi_vec(Xi)
    r_beta = r_z = 0.0
    for beta, z in grid:
        d, db = wirtinger(f, np.array([beta, z]), step)
        r_beta = max(r_beta, float(np.abs(db[:, 0] - z * d[:, 0]).max()))
        r_z = max(r_z, float(np.abs(db[:, 1]).max()))
    return PDEReport(r_beta, r_z)


@dataclass
class ReconstructionReport:
    holomorphy_residual: float
    tol: float = PDE_TOL

    @property
    def passed(self) -> bool:
        return self.holomorphy_residual < self.tol


def reconstruct_and_verify(Xi: FlatChartMap, samples: Optional[Sequence] = None,
                           step: float = PDE_STEP) -> ReconstructionReport:
    if not pde_check(Xi, step=step).passed:
        raise ValueError(f"{Xi.label or 'Xi'} fails the flat co-ordinate PDE")
    F = descend(Xi)
    if samples is None:
        rng = np.random.default_rng(7)
        samples = [bidisc.random_point(rng, 0.8) for _ in range(25)]
    worst = max(holomorphy_residual(F, np.array(s), step) for s in samples)
    return ReconstructionReport(worst)


def builtin(name: str) -> FlatChartMap:
    if name == "identity":
        return lift(lambda s: as_cvec(s), name)
    if name == "gamma":
        m = mobius.chart_m(0.7, 0.3 - 0.2j)
        return lift(lambda s: action.gamma_formula(m, s), name)
    if name == "triangular":
        return lift(lambda s: as_cvec([s[0], s[1] + 0.1 * s[0] ** 2]), name)
    if name == "perturbed":
        return FlatChartMap(lambda beta, z: np.array([beta + np.conj(beta) * z + 0.05 * np.conj(z), z]), name)
    raise ValueError(f"unknown built-in map {name!r}")


BUILTINS = ("identity", "gamma", "triangular", "perturbed")


# Grid files: CSV with header beta,z,xi1,xi2 and complex cells written as a+bi.

def format_complex(c: complex) -> str:
    c = complex(c)
    return f"{c.real!r}{c.imag:+.17g}i"


def parse_complex(text: str) -> complex:
    return complex(text.strip().replace("i", "j"))


def write_grid(path, Xi: FlatChartMap, centers: Sequence, step: float = PDE_STEP):
    """Write Xi at each center and at its eight axis neighbours (+-step along Re/Im of beta and z)."""
    offsets = [(0, 0)] + [(d, 0) for d in (step, -step, 1j * step, -1j * step)] \
        + [(0, d) for d in (step, -step, 1j * step, -1j * step)]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["beta", "z", "xi1", "xi2"])
        for beta, z in centers:
            for db, dz in offsets:
                b, zz = beta + db, z + dz
                x1, x2 = Xi(b, zz)
                w.writerow([format_complex(b), format_complex(zz), format_complex(x1), format_complex(x2)])


def read_grid(path):
    with open(Path(path), newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows or set(rows[0]) != {"beta", "z", "xi1", "xi2"}:
        raise ValueError("grid file needs columns beta,z,xi1,xi2")
    pts = np.array([[parse_complex(r["beta"]), parse_complex(r["z"])] for r in rows])
    vals = np.array([[parse_complex(r["xi1"]), parse_complex(r["xi2"])] for r in rows])
    return pts, vals


def pde_check_grid(path, step: float = PDE_STEP) -> PDEReport:
    """pde_check on tabulated data: every point whose eight axis neighbours are present is a center."""
    pts, vals = read_grid(path)
    coords = np.column_stack([pts[:, 0].real, pts[:, 0].imag, pts[:, 1].real, pts[:, 1].imag])
    tree = cKDTree(coords)
    tol = step * 1e-3
    r_beta = r_z = 0.0
    centers = 0
    for i, c in enumerate(coords):
        idx = []
        for axis in range(4):
            for sign in (1, -1):
                q = c.copy()
                q[axis] += sign * step
                dist, j = tree.query(q)
                idx.append(j if dist < tol else None)
        if None in idx:
            continue
        centers += 1
        d = [(vals[idx[2 * a]] - vals[idx[2 * a + 1]]) / (2 * step) for a in range(4)]
        d_beta_bar = 0.5 * (d[0] + 1j * d[1])
        d_beta = 0.5 * (d[0] - 1j * d[1])
        d_z_bar = 0.5 * (d[2] + 1j * d[3])
        z = pts[i, 1]
        r_beta = max(r_beta, float(np.abs(d_beta_bar - z * d_beta).max()))
        r_z = max(r_z, float(np.abs(d_z_bar).max()))
    if centers == 0:
        raise ValueError("grid file has no complete difference stencils")
    return PDEReport(r_beta, r_z)
