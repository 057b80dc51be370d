"""Quick invariant suites, one per module, used by `symbidisc verify`."""

from __future__ import annotations

import math
from typing import Callable, Dict

import numpy as np

from . import (action, bidisc, bundles, flat_coords, lambda_builder, mobius, royal,
               symmetry, synchrony)
from .numerics import DEFAULT_TOL, Tolerances

SuiteResult = Dict[str, float]


def _max(values) -> float:
    return float(max(values)) if values else 0.0


def suite_mobius(rng, tol: Tolerances) -> tuple:
    res = []
    for _ in range(50):
        m1, m2 = mobius.random_automorphism(rng), mobius.random_automorphism(rng)
        z = mobius.random_disc_point(rng)
        res.append(abs(mobius.compose(m1, m2)(z) - m1(m2(z))))
        res.append(abs(mobius.inverse(m1)(m1(z)) - z))
    r = {"composition": _max(res)}
    return r, r["composition"] < 1e-12


def suite_bidisc(rng, tol) -> tuple:
    rt, leaf, inv = [], [], []
    for _ in range(100):
        s = bidisc.random_point(rng)
        rt.append(np.linalg.norm(np.array(bidisc.pi(*bidisc.roots(s))) - np.array(s)))
        rt.append(np.linalg.norm(np.array(bidisc.from_flat_coords(bidisc.flat_coords(s))) - np.array(s)))
        point, _ = bidisc.royal_intersection(bidisc.leaf_of(s))
        leaf.append(bidisc.royal_discriminant(point))
        m = mobius.random_automorphism(rng)
        inv.append(abs(bidisc.pseudo_param(action.gamma(m, s)) - bidisc.pseudo_param(s)))
    r = {"round_trip": _max(rt), "royal_intersection": _max(leaf), "C_invariance": _max(inv)}
    return r, r["round_trip"] < 1e-12 and r["royal_intersection"] < 1e-12 and r["C_invariance"] < 1e-10


def suite_action(rng, tol) -> tuple:
    hom, eq, rk = [], [], []
    for _ in range(100):
        s = bidisc.random_point(rng)
        m1, m2 = mobius.random_automorphism(rng), mobius.random_automorphism(rng)
        hom.append(np.linalg.norm(np.array(action.gamma(mobius.compose(m1, m2), s))
                                  - np.array(action.gamma(m1, action.gamma(m2, s)))))
        hom.append(np.linalg.norm(action.gamma_formula(m1, s) - np.array(action.gamma(m1, s))))
        z = mobius.random_disc_point(rng)
        eq.append(np.linalg.norm(np.array(action.gamma(m1, bidisc.royal(z))) - np.array(bidisc.royal(m1(z)))))
        rk.append(action.orbit_tangent(s).rank == 3)
        rk.append(action.orbit_tangent(bidisc.royal(z)).rank == 2)
    fiber = action.fiber_search((0, 0.3))
    r = {"homomorphism": _max(hom), "royal_equivariance": _max(eq), "fiber_size": float(len(fiber)),
         "ranks_ok": float(all(rk))}
    return r, r["homomorphism"] < 1e-11 and r["royal_equivariance"] < 1e-11 and len(fiber) == 2 and all(rk)


def suite_bundles(rng, tol) -> tuple:
    agree, cov, flat, det = [], [], [], []
    for _ in range(100):
        s = bidisc.random_point(rng)
        m = mobius.random_automorphism(rng)
        agree.append(bundles.sharp_numeric(s).distance(bundles.sharp_closed(s)))
        cov.append(bundles.covariance_residual(m, s))
        flat.append(bundles.flat_covariance_residual(m, s))
        det.append(bundles.direct_sum_check(s))
    r = {"sharp_agreement": _max(agree), "covariance": _max(cov), "flat_covariance": _max(flat),
         "min_det": float(min(det))}
    return r, r["sharp_agreement"] < 1e-8 and r["covariance"] < 1e-7 and r["flat_covariance"] < 1e-7 and r["min_det"] > 1e-6


def suite_synchrony(rng, tol) -> tuple:
    eig, leaf, slopes = [], [], []
    grid = [mobius.random_disc_point(rng) for _ in range(50)]
    for _ in range(20):
        a = mobius.random_disc_point(rng, 0.8)
        eta = complex(np.exp(1j * rng.uniform(-math.pi, math.pi)))
        rep = synchrony.royal_eigencheck(a, eta)
        eig += [rep.residual_royal, rep.residual_flat]
        leaf.append(synchrony.leaf_double_speed_residual(a, eta, grid))
    inst = royal.make_instance(royal.IDENTITY)
    pair = royal.consistent_pair(inst)
    for _ in range(5):
        s = bidisc.random_point(rng)
        slopes.append(synchrony.sharp_action_order(inst, pair, np.array(s)).fitted_slope)
    r = {"eigen": _max(eig), "double_speed": _max(leaf), "min_slope": float(min(slopes))}
    return r, r["eigen"] < 1e-7 and r["double_speed"] < 1e-9 and r["min_slope"] >= synchrony.SLOPE_THRESHOLD


def suite_royal(rng, tol) -> tuple:
    out, ok = {}, True
    ms = [mobius.random_automorphism(rng) for _ in range(5)]
    zs = [mobius.random_disc_point(rng) for _ in range(5)]
    for kind in (royal.IDENTITY, royal.LINEAR, royal.TRIANGULAR):
        inst = royal.make_instance(kind)
        pair = royal.consistent_pair(inst)
        probes = [inst.forward(np.array(bidisc.random_point(rng))) for _ in range(3)]
        reps = [royal.verify_royal_axioms(inst, pair, ms, zs, probes),
                royal.verify_flat_fibration(inst, pair, [(m, z, mobius.random_disc_point(rng)) for m, z in zip(ms, zs)]),
                royal.verify_regularity(inst, pair, probes),
                royal.verify_synchrony(inst, pair, zs[0], [1j, -1, np.exp(0.4j)], zs)]
        for rep in reps:
            ok = ok and rep.passed
            for k, v in rep.residuals.items():
                out[f"{kind}.{k}"] = max(v, out.get(f"{kind}.{k}", 0.0))
    return out, ok


def suite_lambda(rng, tol) -> tuple:
    out, ok = {}, True
    for kind in (royal.IDENTITY, royal.LINEAR, royal.TRIANGULAR):
        inst = royal.make_instance(kind)
        pair = royal.consistent_pair(inst)
        lam = lambda_builder.build_lambda(inst, pair, lambda z, inst=inst: inst.forward(np.array([0, z])))
        rep = lambda_builder.verify_lambda(lam, inst, pair, lambda_builder.sample_points(rng, 20), rng)
        ok = ok and rep.passed
        out.update({f"{kind}.{k}": v for k, v in rep.residuals.items()})
    return out, ok


def suite_flat_coords(rng, tol) -> tuple:
    out = {}
    ok = True
    for name in flat_coords.BUILTINS:
        rep = flat_coords.pde_check(flat_coords.builtin(name))
        out[f"{name}.beta"] = rep.beta_residual
        out[f"{name}.z"] = rep.z_residual
        ok = ok and (rep.passed != (name == "perturbed"))
    return out, ok


def suite_symmetry(rng, tol) -> tuple:
    ps = [0.1 * k for k in range(1, 10)]
    g = symmetry.no_symmetry_sweep("g", ps[::4])
    t = symmetry.no_symmetry_sweep("tetrablock", ps)
    table = symmetry.diag_table_matches()
    circle = all(symmetry.annulus_symmetry_point(0.5, np.exp(1j * a)).is_symmetry_point for a in np.linspace(0, 6, 7))
    off = not any(symmetry.annulus_symmetry_point(0.5, r).is_symmetry_point for r in (0.6, 0.9, 1.2, 1.9))
    out = {"g_symmetry_points": float(len(g.symmetry_points)),
           "tetra_symmetry_points": float(len(t.symmetry_points)),
           "table_rows_matched": float(sum(table.values()))}
    return out, g.passed and t.passed and all(table.values()) and circle and off


SUITES: Dict[str, Callable] = {
    "mobius": suite_mobius,
    "bidisc": suite_bidisc,
    "action": suite_action,
    "bundles": suite_bundles,
    "synchrony": suite_synchrony,
    "royal": suite_royal,
    "lambda": suite_lambda,
    "flat_coords": suite_flat_coords,
    "symmetry": suite_symmetry,
}


def run_suite(name: str, seed: int = 0, tol: Tolerances = DEFAULT_TOL) -> tuple:
    return SUITES[name](np.random.default_rng(seed), tol)
