"""Build Lambda from the concomitant pair of each harness instance and
report how far it lands from the instance's own forward map.

    python3 scripts/reconstruct_lambda.py --samples 500
"""

import argparse

import numpy as np

from symbidisc import lambda_builder, royal


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--eps", type=complex, default=0.1)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    instances = [royal.make_instance(royal.IDENTITY),
                 royal.make_instance(royal.LINEAR, matrix=np.diag([0.5, 1.0])),
                 royal.make_instance(royal.TRIANGULAR, eps=args.eps)]
    for inst in instances:
        pair = royal.consistent_pair(inst)
        lam = lambda_builder.build_lambda(inst, pair, lambda z, inst=inst: inst.forward(np.array([0, z])))
        rep = lambda_builder.verify_lambda(lam, inst, pair, lambda_builder.sample_points(rng, args.samples), rng)
        print(f"{inst.label}: {'ok' if rep.passed else 'FAILED'}")
        for name, value in rep.residuals.items():
            flag = "" if rep.ok(name) else "  <-- fails"
            print(f"  {name:<16}{value:10.2e}{flag}")


if __name__ == "__main__":
    main()
