"""Compute the transfer-normalized regulator of a unit and compare it with
the extended logarithm.

Example:
    python3 scripts/regulator_demo.py --p 5 --unit 7 --target 8
"""

import argparse

from padicreg.arith import extend_log
from padicreg.homology import BarChain
from padicreg.matforms import OMatrix
from padicreg.regulator import R_NF, RegulatorConfig, hat_R, index


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--unit", type=int, default=7)
    ap.add_argument("--target", type=int, default=8)
    ap.add_argument("--M", type=int, default=None)
    args = ap.parse_args()

    cfg = RegulatorConfig(
        p=args.p,
        M=args.M if args.M is not None else args.target + 10,
        s=1,
        N=1,
        target=args.target,
    )
    params = cfg.ring_params()
    if args.unit % args.p == 0:
        raise SystemExit("the unit must be prime to p")

    u = params.from_int(args.unit)
    chain = BarChain.basis((OMatrix(params, ((u,),)),))
    val = R_NF(cfg, chain)
    ref = extend_log(u)
    print(f"p = {args.p}, unit = {args.unit}, subgroup index = "
          f"{index(cfg.N, cfg.p, cfg.d, cfg.e)}")
    print(f"regulator value   : {val}")
    print(f"extended logarithm: {ref}")
    print(f"agree to {args.target} digits: "
          f"{val.equal_mod(ref, args.target)}")
    print(f"normalized value  : {hat_R(cfg, val)}")


if __name__ == "__main__":
    main()
