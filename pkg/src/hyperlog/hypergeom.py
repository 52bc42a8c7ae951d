"""Rigorous evaluation of pFq series and the checks built on top of them.

Series are summed term by term in Arb ball arithmetic with exact rational term
ratios. Truncation is certified by a geometric tail bound: once the term ratio
is provably at most ``rho < 1`` for every later index, the omitted tail is at
most ``|t_M| / (1 - rho)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from flint import acb, arb

from .arith import RationalLike, as_rational, is_integer
from .ball import Ball, arb_from_rational, rational_power, working_precision
from .errors import BadLowerParameter, DivergentArgument, DomainError, InvalidInput, NotConvergentAt1
from .hodge import GaussTypeData
from .quadrature import de_quad

GUARD_BITS = 30
# extra relative slack on tail bounds; keeps finer re-evaluations strictly inside
TAIL_SLACK = Fraction(1, 1024)


def _check_lower(lower: Sequence[Fraction]) -> None:
    for b in lower:
        if is_integer(b) and b <= 0:
            raise BadLowerParameter(f"lower parameter {b} is a non-positive integer")


def _terminating_order(upper: Sequence[Fraction]) -> int | None:
    orders = [-int(a) for a in upper if is_integer(a) and a <= 0]
    return min(orders) if orders else None


def term_ratio(upper: Sequence[Fraction], lower: Sequence[Fraction], n: int) -> Fraction:
    """``c_{n+1} / c_n`` for the series coefficients (x excluded)."""
    num = Fraction(1)
    for a in upper:
        num *= a + n
    den = Fraction(n + 1)
    for b in lower:
        den *= b + n
    return num / den


def ratio_bound(upper: Sequence[Fraction], lower: Sequence[Fraction], m: int) -> Fraction | None:
    """Upper bound on ``|c_{k+1}/c_k|`` valid for every ``k >= m``, or None if unknown.

    Pairs each upper parameter with a lower one (the factorial counts as lower
    parameter 1). For ``k + b > 0`` and ``k + a > 0`` the factor ``(a+k)/(b+k)`` is at
    most 1 when ``a <= b`` and decreasing otherwise; an unpaired lower parameter
    contributes the decreasing ``1/(b+k)``.
    """
    lows = list(lower) + [Fraction(1)]
    if len(upper) > len(lows):
        return None
    if any(m + a <= 0 for a in upper) or any(m + b <= 0 for b in lows):
        return None
    bound = Fraction(1)
    for a, b in zip(upper, lows):
        if a > b:
            bound *= (a + m) / (b + m)
    for b in lows[len(upper):]:
        bound /= b + m
    return bound


def _zero_like(x):
    return acb(0) if isinstance(x, acb) else arb(0)


def _pfq_value(upper, lower, xv, prec: int, max_terms: int):
    """Raw Arb enclosure of the series at ``xv``; caller sets the working precision."""
    stop = _terminating_order(upper)
    total = _zero_like(xv)
    term = total + 1
    if stop is not None:
        for n in range(stop + 1):
            total += term
            term = term * xv * arb_from_rational(term_ratio(upper, lower, n))
        return total
    xabs = xv.abs_upper()
    tol = arb(2) ** (-(prec + 4))
    for n in range(max_terms):
        rb = ratio_bound(upper, lower, n)
        if rb is not None:
            rho = xabs * arb_from_rational(rb)
            if rho < 1:
                tail = term.abs_upper() / (1 - rho)
                scale = total.abs_lower()
                if tail <= tol * (scale if scale > 1 else arb(1)):
                    tail = tail * arb_from_rational(1 + TAIL_SLACK)
                    rad = tail.abs_upper()
                    if isinstance(total, acb):
                        return total + acb(arb(mid=0, rad=rad), arb(mid=0, rad=rad))
                    return total + arb(mid=0, rad=rad)
        total += term
        term = term * xv * arb_from_rational(term_ratio(upper, lower, n))
    raise DivergentArgument(f"no certified tail bound within {max_terms} terms")


def pfq(upper: Sequence[RationalLike], lower: Sequence[RationalLike], x, prec: int = 128,
        *, max_terms: int = 200_000) -> Ball:
    """Enclosure of pFq(upper; lower; x) inside its disk of convergence.

    ``x`` may be a rational or a :class:`Ball` (real or complex).
    """
    upper = [as_rational(a) for a in upper]
    lower = [as_rational(b) for b in lower]
    _check_lower(lower)
    xb = x if isinstance(x, Ball) else Ball.exact(x, prec + GUARD_BITS)
    terminating = _terminating_order(upper) is not None
    with working_precision(prec + GUARD_BITS):
        xv = xb.value
        if not terminating and not xv.is_zero():
            if len(upper) > len(lower) + 1:
                raise DivergentArgument("p > q + 1: the series diverges for x != 0")
            if len(upper) == len(lower) + 1 and not (xv.abs_upper() < 1):
                raise DivergentArgument(f"|x| + radius must be < 1, got |x| <= {xv.abs_upper()}")
        val = _pfq_value(upper, lower, xv, prec, max_terms)
    return Ball(val, prec, xb.heuristic)


def pfq_derivative(upper: Sequence[RationalLike], lower: Sequence[RationalLike], x, k: int = 1,
                   prec: int = 128) -> Ball:
    """k-th x-derivative via the term-wise differentiated series."""
    upper = [as_rational(a) for a in upper]
    lower = [as_rational(b) for b in lower]
    factor = Fraction(1)
    for j in range(k):
        for a in upper:
            factor *= a + j
        for b in lower:
            factor /= b + j
    shifted = pfq([a + k for a in upper], [b + k for b in lower], x, prec)
    return shifted * factor


def kummer_start(q: Fraction, a: Fraction, b: Fraction) -> int:
    """First index M from which ``m - (m+1) r(m) >= δ/2`` holds, where ``δ = a+b-q-2``.

    ``r(m) = (m+1)(m+q)/((m+a)(m+b))`` is the term ratio of 3F2(1,1,q;a,b;1). The
    inequality is a quadratic in m with leading coefficient δ/2, so Cauchy's root
    bound makes the threshold explicit.
    """
    delta = a + b - q - 2
    c2 = delta / 2
    c1 = a * b - 1 - 2 * q - delta * (a + b) / 2
    c0 = -q - delta * a * b / 2
    root_bound = 1 + max(abs(c1), abs(c0)) / c2
    positivity = max(-a, -b, -q)
    return max(math.ceil(root_bound), math.floor(positivity) + 1, 1)


def pfq_at_1(q: RationalLike, a: RationalLike, b: RationalLike, prec: int = 128,
             *, max_terms: int = 20_000) -> Ball:
    """Enclosure of 3F2(1,1,q; a,b; 1) by direct summation.

    Past the Kummer threshold M the tail obeys ``sum_{m>=M} |t_m| <= 2 M |t_M| / δ``.
    Convergence is algebraic, so the returned radius is usually far above 2^-prec.
    """
    q, a, b = as_rational(q), as_rational(a), as_rational(b)
    _check_lower([a, b])
    delta = a + b - q - 2
    if delta <= 0:
        raise NotConvergentAt1(f"a + b - q - 2 = {delta} <= 0")
    upper, lower = [Fraction(1), Fraction(1), q], [a, b]
    wp = prec + GUARD_BITS
    if _terminating_order(upper) is not None:
        return pfq(upper, lower, 1, prec)
    start = kummer_start(q, a, b)
    with working_precision(wp):
        total, term = arb(0), arb(1)
        tol = arb(2) ** (-(prec + 4))
        two_over_delta = arb_from_rational(2 / delta)
        n = 0
        while True:
            if n >= start:
                tail = term.abs_upper() * n * two_over_delta
                if tail <= tol * total.abs_lower() or n >= max(max_terms, start):
                    tail = tail * arb_from_rational(1 + TAIL_SLACK)
                    return Ball(total + arb(mid=0, rad=tail.abs_upper()), prec)
            total += term
            term = term * arb_from_rational(term_ratio(upper, lower, n))
            n += 1


def f1f2(mu: RationalLike, beta1: RationalLike, beta2: RationalLike, lam: RationalLike,
         prec: int = 128) -> tuple[Ball, Ball]:
    """The two functions ``(1-λ)^(μ-1) 3F2(1,1,c; 2-β1, 2-β2; 1/(1-λ))`` with c = 1-μ, 2-μ."""
    mu, b1, b2, lam = (as_rational(v) for v in (mu, beta1, beta2, lam))
    if lam >= 0:
        raise DomainError(f"λ = {lam} must be negative")
    for name, v in (("mu", mu), ("mu-beta1", mu - b1), ("mu-beta2", mu - b2),
                    ("mu-beta1-beta2", mu - b1 - b2), ("beta1", b1), ("beta2", b2)):
        if is_integer(v):
            raise InvalidInput(f"{name} = {v} is an integer")
    z = 1 / (1 - lam)
    pref = rational_power(Ball.exact(1 - lam, prec + GUARD_BITS), mu - 1)
    lower = [2 - b1, 2 - b2]
    f1 = pref * pfq([1, 1, 1 - mu], lower, z, prec + GUARD_BITS)
    f2 = pref * pfq([1, 1, 2 - mu], lower, z, prec + GUARD_BITS)
    return Ball.of(f1, prec), Ball.of(f2, prec)


def gauss_derivative_check(beta1: RationalLike, beta2: RationalLike, t: RationalLike,
                           prec: int = 128) -> tuple[Ball, Ball]:
    """Residuals of the two derivative identities for F(a,b,a+b;t) and F(a,b,a+b+1;t).

    ``(1-t) F'(a,b,a+b) - ab/(a+b) F(a,b,a+b+1)`` and
    ``t F'(a,b,a+b+1) - (a+b) (F(a,b,a+b) - F(a,b,a+b+1))``.
    """
    a, b, t = as_rational(beta1), as_rational(beta2), as_rational(t)
    if is_integer(a) or is_integer(b):
        raise InvalidInput("beta_i must not be integers")
    if not 0 < t < 1:
        raise DomainError("t must lie in (0, 1)")
    c = a + b
    f0 = pfq([a, b], [c], t, prec)
    f1 = pfq([a, b], [c + 1], t, prec)
    df0 = pfq_derivative([a, b], [c], t, 1, prec)
    df1 = pfq_derivative([a, b], [c + 1], t, 1, prec)
    r1 = df0 * (1 - t) - f1 * (a * b / c)
    r2 = df1 * t - (f0 - f1) * c
    return r1, r2


def euler_integral_check(g: GaussTypeData, t: RationalLike, prec: int = 64) -> Ball:
    """``I(t)/I(0) - 2F1(α, β; α+β; t)`` with ``I(t) = ∫_0^1 x^(α-1) (1-x)^(β-1) (1-tx)^(-β) dx``.

    The quadrature radius is an estimate, so the residual is flagged heuristic.
    """
    t = as_rational(t)
    if not 0 <= t < 1:
        raise DomainError("t must lie in [0, 1)")
    alpha, beta = g.alpha_n, g.beta_n
    it = de_quad(alpha, beta, beta, t, prec)
    i0 = de_quad(alpha, beta, beta, 0, prec)
    series = pfq([alpha, beta], [alpha + beta], t, prec)
    return it / i0 - series
