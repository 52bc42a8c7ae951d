"""Rational-function recurrences in λ and the determinant non-vanishing scan.

With ``M(s) = [[A(s), 1], [B(s), 0]]`` the recurrence unrolls to

    (C_r, D_r)(μ) = M(μ) M(μ+1) ... M(μ+r) (0, 1)^T,

so every quantity at argument μ comes from one prefix product along the chain
μ, μ+1, μ+2, ... . Both A and B have denominator ``(1-λ)`` in λ; the products are
kept as polynomial matrices over ``(1-λ)^(r+1)`` and only reduced on request.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from flint import arb

from .arith import RationalLike, as_rational, is_integer
from .ball import Ball, arb_from_rational, working_precision
from .errors import InvalidInput, PoleAtShift
from .polynomial import Poly, RationalFunction

LAM = Poly.x()
ONE_MINUS_LAM = Poly([1, -1])


@dataclass(frozen=True)
class RecurrenceParams:
    mu: Fraction
    beta1: Fraction
    beta2: Fraction

    def __post_init__(self):
        for name in ("mu", "beta1", "beta2"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        checks = {"mu": self.mu, "mu-beta1": self.mu - self.beta1, "mu-beta2": self.mu - self.beta2,
                  "mu-beta1-beta2": self.mu - self.beta1 - self.beta2,
                  "beta1": self.beta1, "beta2": self.beta2}
        bad = [name for name, v in checks.items() if is_integer(v)]
        if bad:
            raise InvalidInput(f"integral quantities: {', '.join(bad)}")

    @property
    def a(self) -> Fraction:
        return 2 - self.beta1

    @property
    def b(self) -> Fraction:
        return 2 - self.beta2


def _pole_factor(p: RecurrenceParams, s: Fraction) -> Fraction:
    g = (p.a + s - 1) * (p.b + s - 1)
    if g == 0:
        raise PoleAtShift(f"(a+s-1)(b+s-1) vanishes at s = {s}")
    return g


def _numerators(p: RecurrenceParams, s: Fraction) -> tuple[Poly, Poly]:
    """``(1-λ) A(s)`` and ``(1-λ) B(s)`` as polynomials in λ."""
    g = _pole_factor(p, s)
    pa = ONE_MINUS_LAM * (s * (p.a + p.b + 2 * s - 3) / g) - Poly.const(s * s / g)
    pb = LAM * (-s * (1 - s) / g)
    return pa, pb


def ab_funcs(p: RecurrenceParams, s: RationalLike) -> tuple[RationalFunction, RationalFunction]:
    s = as_rational(s)
    pa, pb = _numerators(p, s)
    return RationalFunction(pa, ONE_MINUS_LAM), RationalFunction(pb, ONE_MINUS_LAM)


def _over_one_minus_lam(num: Poly, k: int) -> RationalFunction:
    """``num / (1-λ)^k`` reduced by stripping common factors of (1-λ)."""
    while k and not num.is_zero() and num(1) == 0:
        num = num // ONE_MINUS_LAM
        k -= 1
    if num.is_zero():
        return RationalFunction(0)
    return RationalFunction(num, ONE_MINUS_LAM ** k, reduce=False)


def _prefix_products(p: RecurrenceParams) -> Iterator[tuple[Poly, Poly, Poly, Poly]]:
    """Numerators of ``M(μ) ... M(μ+r)`` for r = -1, 0, 1, ... (denominator (1-λ)^(r+1))."""
    n00, n01, n10, n11 = Poly.const(1), Poly(), Poly(), Poly.const(1)
    yield n00, n01, n10, n11
    r = 0
    while True:
        pa, pb = _numerators(p, p.mu + r)
        n00, n01, n10, n11 = (n00 * pa + n01 * pb, n00 * ONE_MINUS_LAM,
                              n10 * pa + n11 * pb, n10 * ONE_MINUS_LAM)
        yield n00, n01, n10, n11
        r += 1


@dataclass(frozen=True)
class CDPair:
    index: int
    s: Fraction
    C: RationalFunction
    D: RationalFunction


@dataclass(frozen=True)
class EPair:
    r: int
    E1: RationalFunction
    E2: RationalFunction


def cd_sequence(p: RecurrenceParams, r: int) -> CDPair:
    if r < -1:
        raise InvalidInput("index must be >= -1")
    for k, (_, n01, _, n11) in enumerate(_prefix_products(p), start=-1):
        if k == r:
            return CDPair(r, p.mu, _over_one_minus_lam(n01, r + 1), _over_one_minus_lam(n11, r + 1))
    raise AssertionError("unreachable")


def _e_numerators(p: RecurrenceParams) -> Iterator[tuple[int, Poly, Poly]]:
    """``(r, n1, n2)`` with ``E_i^(r) = n_i / (1-λ)^(r+1)`` for r = -1, 0, 1, ..."""
    products = _prefix_products(p)
    prev = next(products)
    r = -1
    for cur in products:
        n1 = LAM * prev[1] + cur[1]
        n2 = LAM * prev[3] + cur[3]
        yield r, n1, n2
        prev = cur
        r += 1


def e_pair(p: RecurrenceParams, r: int) -> EPair:
    if r < -1:
        raise InvalidInput("r must be >= -1")
    for k, n1, n2 in _e_numerators(p):
        if k == r:
            return EPair(r, _over_one_minus_lam(n1, r + 1), _over_one_minus_lam(n2, r + 1))
    raise AssertionError("unreachable")


def _det_numerators(p: RecurrenceParams) -> Iterator[tuple[int, Poly]]:
    """``(r, num)`` with ``det_r = num / (1-λ)^(2r+1)`` for r = 0, 1, ..."""
    it = _e_numerators(p)
    _, m1, m2 = next(it)
    for r, n1, n2 in it:
        yield r, n1 * m2 - n2 * m1
        m1, m2 = n1, n2


def e_det(p: RecurrenceParams, r: int) -> RationalFunction:
    """``det [[E1^(r), E2^(r)], [E1^(r-1), E2^(r-1)]]`` reduced."""
    if r < 0:
        raise InvalidInput("r must be >= 0")
    for k, num in _det_numerators(p):
        if k == r:
            return _over_one_minus_lam(num, 2 * r + 1)
    raise AssertionError("unreachable")


def det_scan(p: RecurrenceParams, rmax: int) -> list[int]:
    """Every r in [0, rmax] where the determinant vanishes identically in λ."""
    zeros = []
    for r, num in _det_numerators(p):
        if r > rmax:
            break
        if num.is_zero():
            zeros.append(r)
    return zeros


def closed_form_det0(p: RecurrenceParams, s: RationalLike) -> RationalFunction:
    """``λ((a-1)(b-1)λ + s(a+b-2)) / ((s+a-1)(s+b-1))``: the r = 0 determinant at argument s."""
    s = as_rational(s)
    g = _pole_factor(p, s)
    a, b = p.a, p.b
    return RationalFunction(LAM * (LAM * ((a - 1) * (b - 1)) + Poly.const(s * (a + b - 2))) * (1 / g))


def block_identity_det(p: RecurrenceParams, r: int) -> RationalFunction:
    """``prod_{j<r} (-B(μ+j)) * det_0(μ+r)``, the determinant obtained by peeling the chain."""
    out = closed_form_det0(p, p.mu + r)
    for j in range(r):
        out = out * (-ab_funcs(p, p.mu + j)[1])
    return out


def e_pair_ball(p: RecurrenceParams, r: int, lam: RationalLike, prec: int = 128) -> tuple[Ball, Ball]:
    """``(E1^(r), E2^(r))`` at a numeric λ, running the recurrence in ball arithmetic."""
    lam = as_rational(lam)
    if lam == 1:
        raise InvalidInput("λ = 1 is a pole of A and B")
    if r < -1:
        raise InvalidInput("r must be >= -1")
    with working_precision(prec):
        lv = arb_from_rational(lam)
        inv = 1 / (1 - lv)
        k = [[arb(1), arb(0)], [arb(0), arb(1)]]
        cols = [(k[0][1], k[1][1])]
        for j in range(r + 2):
            s = p.mu + j
            g = arb_from_rational(_pole_factor(p, s))
            sv = arb_from_rational(s)
            a_val = sv * (arb_from_rational(p.a + p.b + 2 * s - 3) - sv * inv) / g
            b_val = sv * (1 - sv) * (1 - inv) / g
            k = [[k[0][0] * a_val + k[0][1] * b_val, k[0][0]],
                 [k[1][0] * a_val + k[1][1] * b_val, k[1][0]]]
            cols.append((k[0][1], k[1][1]))
        (c0, d0), (c1, d1) = cols[r + 1], cols[r + 2]
        e1 = lv * c0 + (1 - lv) * c1
        e2 = lv * d0 + (1 - lv) * d1
    return Ball(e1, prec), Ball(e2, prec)
