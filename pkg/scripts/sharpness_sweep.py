"""Sharp-action slopes across instances.

Fits log|residual| against log t at random points of each instance and
prints one row per instance: min/median/max slope and the pass count.

    python3 scripts/sharpness_sweep.py --points 50 --seed 0
"""

import argparse

import numpy as np

from symbidisc import bidisc, royal, synchrony


def sweep(kind, n, rng, adapted=True, radius=0.9):
    inst = royal.make_instance(kind)
    pair = royal.consistent_pair(inst)
    reps = []
    for _ in range(n):
        mu = inst.forward(np.array(bidisc.random_point(rng, radius)))
        reps.append(synchrony.sharp_action_order(inst, pair, mu, adapted=adapted))
    return reps


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--fixed", action="store_true", help="use the unadapted pair")
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    print(f"{'instance':<18}{'min':>8}{'median':>8}{'max':>8}  passed")
    for kind in royal.KINDS:
        reps = sweep(kind, args.points, rng, adapted=not args.fixed)
        slopes = np.array([r.fitted_slope for r in reps])
        npass = sum(r.passed for r in reps)
        print(f"{kind:<18}{slopes.min():8.3f}{np.median(slopes):8.3f}{slopes.max():8.3f}  {npass}/{len(reps)}")


if __name__ == "__main__":
    main()
