"""Which assignment of the three cubic roots, and which log convention, makes the
closed form match the series? Reports every combination at the given points and
bisects for the point where the single-quotient logarithm starts to jump.
"""

import argparse
from fractions import Fraction

from hyperlog.explicit_log import branch_diagnostic, explicit_residual


def ratio_breaks(x: Fraction, prec: int) -> bool:
    return not explicit_residual(x, prec, convention="ratio").contains_zero()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--x", nargs="*", default=["1/16", "1/4", "1/2", "3/4"])
    ap.add_argument("--prec", type=int, default=128)
    ap.add_argument("--bisect-steps", type=int, default=20)
    args = ap.parse_args()

    for xs in args.x:
        x = Fraction(xs)
        print(f"x = {x}")
        for o in branch_diagnostic(x, args.prec):
            status = "vanishes" if o.vanishes else (o.error or f"|r| <= {float(o.residual.magnitude()):.3e}")
            print(f"  order={o.order} {o.convention:<10} {status}")

    lo, hi = Fraction(1, 1000), Fraction(999, 1000)
    if ratio_breaks(lo, args.prec) or not ratio_breaks(hi, args.prec):
        print("single-quotient convention: no clean transition on (0.001, 0.999)")
        return
    for _ in range(args.bisect_steps):
        mid = (lo + hi) / 2
        if ratio_breaks(mid, args.prec):
            hi = mid
        else:
            lo = mid
    print(f"single-quotient convention fails from x ~ {float(hi):.6f}")


if __name__ == "__main__":
    main()
