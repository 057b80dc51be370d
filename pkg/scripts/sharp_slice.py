"""Fixed versus adapted concomitant pair along a circle in one flat leaf.

With the fixed pair the o(t) relation only holds on the slice (0, p), p > 0,
so every row off it shows slope 1; the adapted pair restores slope 2.

    python3 scripts/sharp_slice.py --beta 0.3 --radius 0.5 --n 12
"""

import argparse
import cmath
import math

import numpy as np

from symbidisc import bidisc, lambda_builder, royal, synchrony


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--beta", type=complex, default=0.3)
    ap.add_argument("--radius", type=float, default=0.5)
    ap.add_argument("--n", type=int, default=12)
    args = ap.parse_args()

    inst = royal.make_instance(royal.IDENTITY)
    pair = royal.consistent_pair(inst)
    leaf = bidisc.FlatLeaf(args.beta)
    print(f"{'arg z':>8}{'arg L2':>9}{'fixed':>8}{'adapted':>9}")
    for t in np.linspace(0, 2 * math.pi, args.n, endpoint=False):
        s = bidisc.leaf_point(leaf, args.radius * cmath.exp(1j * t))
        if bidisc.is_royal(s, 1e-8):
            continue
        mu = np.array(s)
        fixed = synchrony.sharp_action_order(inst, pair, mu, adapted=False).fitted_slope
        adapted = synchrony.sharp_action_order(inst, pair, mu).fitted_slope
        q = lambda_builder.L_of(s).s2
        print(f"{t:8.3f}{cmath.phase(q):9.3f}{fixed:8.3f}{adapted:9.3f}")


if __name__ == "__main__":
    main()
