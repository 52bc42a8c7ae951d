"""Residual of the closed-form cube-root/logarithm expression across (0, 1).

Prints the midpoint magnitude and radius of the residual per sample point, for
both ways of forming the logarithm of a quotient.
"""

import argparse
from fractions import Fraction

from hyperlog.explicit_log import LOG_CONVENTIONS, explicit_residual


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=32, help="sample k/points for k = 1 .. points-1")
    ap.add_argument("--prec", type=int, default=192)
    args = ap.parse_args()

    print(f"{'x':>8}  " + "  ".join(f"{c:>28}" for c in LOG_CONVENTIONS))
    for k in range(1, args.points):
        x = Fraction(k, args.points)
        cells = []
        for conv in LOG_CONVENTIONS:
            r = explicit_residual(x, args.prec, convention=conv)
            mark = "ok " if r.contains_zero() else "BAD"
            cells.append(f"{mark} |r|<={float(r.magnitude()):9.2e} rad={float(r.radius()):8.1e}")
        print(f"{str(x):>8}  " + "  ".join(f"{c:>28}" for c in cells))


if __name__ == "__main__":
    main()
