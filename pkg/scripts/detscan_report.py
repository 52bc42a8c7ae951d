"""Exact determinant scan for a batch of random admissible (mu, beta1, beta2).

For each parameter set reports the r = 0 closed-form check, any r <= rmax where
the determinant vanishes identically, and the numerator degree at rmax.
"""

import argparse
import random
import time
from fractions import Fraction

from hyperlog.errors import InvalidInput
from hyperlog.regulator import RecurrenceParams, closed_form_det0, det_scan, e_det


def random_params(rng: random.Random, max_den: int) -> RecurrenceParams:
    while True:
        vals = [Fraction(rng.randint(-2 * d, 2 * d), d) for d in (rng.randint(2, max_den) for _ in range(3))]
        try:
            return RecurrenceParams(*vals)
        except InvalidInput:
            continue


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--rmax", type=int, default=60)
    ap.add_argument("--max-den", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    sets = [RecurrenceParams(Fraction(1, 2), Fraction(1, 6), Fraction(5, 6)),
            RecurrenceParams(Fraction(1, 2), Fraction(1, 6), Fraction(1, 4))]
    sets += [random_params(rng, args.max_den) for _ in range(args.count)]
    for p in sets:
        t0 = time.perf_counter()
        closed = e_det(p, 0) == closed_form_det0(p, p.mu)
        zeros = det_scan(p, args.rmax)
        deg = e_det(p, args.rmax).num.degree
        dt = time.perf_counter() - t0
        print(f"mu={str(p.mu):>6} b1={str(p.beta1):>6} b2={str(p.beta2):>6}  closed_form={closed}  "
              f"vanishing={zeros}  deg(num at rmax)={deg}  {dt:.2f}s")


if __name__ == "__main__":
    main()
