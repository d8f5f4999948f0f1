"""Survey the identity defects of the series evaluator on random tuples.

Samples random congruence-subgroup tuples and prints the observed valuation
of each defect: the alternating face sum, two-sided translation, and
conjugation.  All observed valuations should reach the certified target.

Example:
    python3 scripts/defect_survey.py --p 3 --s 2 --N 2 --target 4 --trials 5
"""

import argparse
import random
import time

from padicreg.arith import RingParams
from padicreg.cocycle import (
    EvalSettings,
    cocycle_defect,
    conjugation_defect,
    invariance_defect,
)
from padicreg.matforms import OMatrix


def one_unit(rng, params, N, e):
    pe = params.p**e
    span = params.pM // pe
    return OMatrix(
        params,
        tuple(
            tuple(
                params.from_int((1 if i == j else 0) + pe * rng.randrange(span))
                for j in range(N)
            )
            for i in range(N)
        ),
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--e", type=int, default=1)
    ap.add_argument("--s", type=int, default=2)
    ap.add_argument("--N", type=int, default=2)
    ap.add_argument("--target", type=int, default=4)
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    settings = EvalSettings(e=args.e, s=args.s, target=args.target)
    params = RingParams(args.p, settings.work_precision(args.p))
    rng = random.Random(args.seed)
    print(f"degree cap {settings.degree(args.p)}, "
          f"working digits {params.M}, target {args.target}")

    t0 = time.time()
    for k in range(args.trials):
        t5 = tuple(one_unit(rng, params, args.N, args.e)
                   for _ in range(2 * args.s + 1))
        gs = t5[:-1]
        y1 = one_unit(rng, params, args.N, args.e)
        y2 = one_unit(rng, params, args.N, args.e)
        face = cocycle_defect(t5, settings).val_floor()
        shift = invariance_defect(gs, y1, y2, settings).val_floor()
        conj = conjugation_defect(gs, y1, settings).val_floor()
        print(f"trial {k}: face-sum >= {face}, translation >= {shift}, "
              f"conjugation >= {conj}")
    print(f"elapsed {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
