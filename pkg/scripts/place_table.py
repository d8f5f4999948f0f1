"""Print the p-adically valued absolute values of a rational at every
relevant place and verify that their product is exactly one.

Example:
    python3 scripts/place_table.py --x=-50/27 --p 5
"""

import argparse
from fractions import Fraction

from padicreg.regulator import abs_value_Q, product_formula_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--x", type=str, default="-50/27")
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--target", type=int, default=8)
    args = ap.parse_args()

    x = Fraction(args.x)
    report = product_formula_check(x, args.p, args.target)
    support = sorted(
        {f for f in (x.numerator, x.denominator) for f in _factors(abs(f))}
        | {args.p}
    )
    print(f"x = {x}, values taken in the {args.p}-adic numbers")
    for ell in support:
        print(f"  place {ell:>3}: {abs_value_Q(x, ell, args.p).value}")
    print(f"  place inf: {abs_value_Q(x, 'inf', args.p).value}")
    print(f"product over all places: {report.product} "
          f"(exact: {report.exact})")
    print(f"log sum valuation >= {report.log_sum_valuation} "
          f"(target {args.target})")


def _factors(n):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


if __name__ == "__main__":
    main()
