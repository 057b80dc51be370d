"""Command-line front end. Every subcommand writes JSON lines to stdout.

Exit codes: 2 usage error, 1 failed verification, 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from . import (action, bidisc, bundles, flat_coords, lambda_builder, mobius, royal,
               suites, symmetry, synchrony)
from .numerics import Tolerances

ENV_PREFIX = "SYMBIDISC_"


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    try:
        return complex(str(text).strip().replace(" ", "").replace("i", "j"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from exc


def encode(obj: Any) -> Any:
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": float(obj.real), "im": float(obj.imag)}
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if isinstance(obj, np.ndarray):
        return [encode(x) for x in obj.tolist()]
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if hasattr(obj, "value") and isinstance(getattr(obj, "value"), str):
        return obj.value
    return obj


@dataclass
class CommandResult:
    op: str
    input: dict
    output: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    passed: Optional[bool] = None

    def to_json(self) -> str:
        record = {"op": self.op, "input": self.input, **self.output,
                  "residuals": self.residuals, "pass": self.passed}
        return json.dumps(encode(record), sort_keys=False)

    def to_text(self) -> str:
        parts = [f"[{self.op}] pass={self.passed}"]
        parts += [f"  {k}: {encode(v)}" for k, v in self.output.items()]
        parts += [f"  residual {k}: {v:.3e}" for k, v in self.residuals.items()]
        return "\n".join(parts)


def _line(line) -> list:
    return list(line.direction)


def cmd_membership(a, tol):
    s = (a.s1, a.s2)
    cls = bidisc.contains(s)
    return [CommandResult("membership", {"s": s}, {"class": cls}, {}, cls is bidisc.Membership.INTERIOR)]


def cmd_orbit(a, tol):
    s = bidisc.require_interior((a.s1, a.s2))
    pts = action.orbit_samples(s, a.grid, np.random.default_rng(a.seed))
    return [CommandResult("orbit", {"s": s, "grid": a.grid},
                          {"stabilizer_order": action.stabilizer_order(s), "samples": [list(p) for p in pts]})]


def cmd_geodesic(a, tol):
    leaf = bidisc.FlatLeaf(a.beta)
    if not abs(a.beta) < 1:
        raise UsageError("--beta must lie in the unit disc")
    point, z0 = bidisc.royal_intersection(leaf)
    k = max(a.samples, 1)
    zs = [0.95 * r * np.exp(1j * t) for r, t in zip(np.linspace(0, 1, k), np.linspace(0, 2 * math.pi * 3, k))]
    samples = [list(bidisc.leaf_point(leaf, z)) for z in zs]
    return [CommandResult("geodesic", {"beta": a.beta, "samples": a.samples},
                          {"royal_point": list(point), "z0": z0, "points": samples})]


def cmd_sharp(a, tol):
    s = bidisc.require_interior((a.s1, a.s2))
    closed = bundles.sharp_closed(s)
    numeric = bundles.sharp_numeric(s)
    C = bidisc.pseudo_param(s)
    out = {"sharp": _line(closed), "flat": _line(bundles.flat_direction(s)), "C": C, "P": float(np.arctanh(C)),
           "det": bundles.direct_sum_check(s)}
    res = {"closed_vs_numeric": closed.distance(numeric)}
    return [CommandResult("sharp", {"s": s}, out, res, res["closed_vs_numeric"] < 1e-8)]


def cmd_synchrony(a, tol):
    if abs(abs(a.eta) - 1) > 1e-12:
        raise UsageError("--eta must have modulus 1")
    if not abs(a.alpha) < 1:
        raise UsageError("--alpha must lie in the unit disc")
    rep = synchrony.royal_eigencheck(a.alpha, a.eta)
    rng = np.random.default_rng(a.seed)
    grid = [mobius.random_disc_point(rng) for _ in range(200)]
    leaf = synchrony.leaf_double_speed_residual(a.alpha, a.eta, grid)
    res = {"royal": rep.residual_royal, "flat": rep.residual_flat, "double_speed": leaf}
    ok = rep.valid(1e-7) and leaf < 1e-9
    return [CommandResult("synchrony", {"alpha": a.alpha, "eta": a.eta},
                          {"royal_eigenvalue": rep.royal_eigenvalue, "flat_eigenvalue": rep.flat_eigenvalue}, res, ok)]


def _instance_from_args(a):
    if a.instance == royal.LINEAR:
        vals = [parse_complex(x) for x in a.matrix.split(",")]
        if len(vals) != 4:
            raise UsageError("--matrix takes four comma-separated entries")
        return royal.make_instance(royal.LINEAR, matrix=np.array(vals).reshape(2, 2))
    if a.instance == royal.TRIANGULAR:
        return royal.make_instance(royal.TRIANGULAR, eps=a.eps)
    return royal.make_instance(a.instance)


def cmd_lambda(a, tol):
    try:
        inst = _instance_from_args(a)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    pair = royal.consistent_pair(inst)
    lam = lambda_builder.build_lambda(inst, pair, lambda z: inst.forward(np.array([0, z])))
    rng = np.random.default_rng(a.seed)
    rep = lambda_builder.verify_lambda(lam, inst, pair, lambda_builder.sample_points(rng, a.samples), rng)
    return [CommandResult("lambda", {"instance": inst.label, "samples": a.samples},
                          {"flags": rep.flags}, rep.residuals, rep.passed)]


def cmd_pde_check(a, tol):
    if a.grid:
        rep = flat_coords.pde_check_grid(a.grid, a.step)
        src = {"grid": a.grid}
    else:
        rep = flat_coords.pde_check(flat_coords.builtin(a.builtin), step=a.step)
        src = {"builtin": a.builtin}
    res = {"beta_equation": rep.beta_residual, "z_equation": rep.z_residual}
    return [CommandResult("pde-check", {**src, "step": a.step}, {}, res, rep.passed)]


def cmd_symmetry(a, tol):
    if a.domain == "annulus":
        try:
            rep = symmetry.annulus_symmetry_point(a.q, a.z)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return [CommandResult("symmetry", {"domain": "annulus", "q": a.q, "z": a.z},
                              {"symmetry_point": rep.is_symmetry_point, "fixed_points": list(rep.fixed_points)})]
    ps = [float(x) for x in a.p_grid.split(",")]
    rep = symmetry.no_symmetry_sweep(a.domain, ps)
    rows = [{"p": r["p"], "candidate": r["candidate"], "kind": r["kind"]} for r in rep.rows]
    return [CommandResult("symmetry", {"domain": a.domain, "p": ps},
                          {"symmetry_points": len(rep.symmetry_points), "rows": rows}, {}, rep.passed)]


def cmd_verify(a, tol):
    names = list(suites.SUITES) if a.suite == "all" else [a.suite]
    out = []
    for name in names:
        res, ok = suites.run_suite(name, a.seed, tol)
        out.append(CommandResult("verify", {"suite": name}, {}, res, bool(ok)))
    return out


def build_parser() -> argparse.ArgumentParser:
    env = os.environ
    p = argparse.ArgumentParser(prog="symbidisc", description=__doc__)
    p.add_argument("--tol", type=float, default=float(env.get(ENV_PREFIX + "TOL", 1e-9)))
    p.add_argument("--fd-step", type=float, default=float(env.get(ENV_PREFIX + "FD_STEP", 1e-5)))
    p.add_argument("--seed", type=int, default=int(env.get(ENV_PREFIX + "SEED", 0)))
    # JSON lines are the default; --text switches to a readable summary
    p.add_argument("--json", dest="json", action="store_true",
                   default=env.get(ENV_PREFIX + "JSON", "1") not in ("", "0"))
    p.add_argument("--text", dest="json", action="store_false")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("membership")
    m.add_argument("s1", type=parse_complex)
    m.add_argument("s2", type=parse_complex)
    m.set_defaults(fn=cmd_membership)

    o = sub.add_parser("orbit")
    o.add_argument("s1", type=parse_complex)
    o.add_argument("s2", type=parse_complex)
    o.add_argument("--grid", type=int, default=6)
    o.set_defaults(fn=cmd_orbit)

    g = sub.add_parser("geodesic")
    g.add_argument("--beta", type=parse_complex, required=True)
    g.add_argument("--samples", type=int, default=50)
    g.set_defaults(fn=cmd_geodesic)

    s = sub.add_parser("sharp")
    s.add_argument("s1", type=parse_complex)
    s.add_argument("s2", type=parse_complex)
    s.set_defaults(fn=cmd_sharp)

    y = sub.add_parser("synchrony")
    y.add_argument("--alpha", type=parse_complex, required=True)
    y.add_argument("--eta", type=parse_complex, required=True)
    y.set_defaults(fn=cmd_synchrony)

    lam = sub.add_parser("lambda")
    lam.add_argument("--instance", choices=[royal.IDENTITY, royal.LINEAR, royal.TRIANGULAR], required=True)
    lam.add_argument("--matrix", default="0.5,0,0,1")
    lam.add_argument("--eps", type=parse_complex, default=0.1)
    lam.add_argument("--samples", type=int, default=100)
    lam.set_defaults(fn=cmd_lambda)

    pde = sub.add_parser("pde-check")
    src = pde.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", choices=flat_coords.BUILTINS)
    src.add_argument("--grid")
    pde.add_argument("--step", type=float, default=flat_coords.PDE_STEP)
    pde.set_defaults(fn=cmd_pde_check)

    sy = sub.add_parser("symmetry")
    sy.add_argument("--domain", choices=["annulus", "g", "tetrablock"], required=True)
    sy.add_argument("--q", type=float, default=0.5)
    sy.add_argument("--z", type=parse_complex, default=1)
    sy.add_argument("--p-grid", default="0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9")
    sy.set_defaults(fn=cmd_symmetry)

    v = sub.add_parser("verify")
    v.add_argument("--suite", choices=["all", *suites.SUITES], default="all")
    v.set_defaults(fn=cmd_verify)
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        tol = Tolerances(args.tol, args.fd_step, Tolerances().rank_tol)
        results = args.fn(args, tol)
    except (UsageError, ValueError) as exc:
        print(f"symbidisc: error: {exc}", file=sys.stderr)
        return 2
    for r in results:
        print(r.to_json() if args.json else r.to_text(), file=stdout)
    return 1 if any(r.passed is False for r in results) else 0


def main() -> None:
    sys.exit(run())
