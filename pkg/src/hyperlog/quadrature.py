"""Tanh-sinh quadrature for Beta-type integrands with endpoint singularities.

Integrates ``x^(α-1) (1-x)^(β-1) (1-tx)^(-γ)`` over (0, 1). With the substitution
``x = 1/(1 + exp(-π sinh u))`` both ``log x`` and ``log(1-x)`` are available without
cancellation, and the Jacobian ``x(1-x) π cosh u`` absorbs one power of each
endpoint factor, so the transformed integrand is smooth and double-exponentially
decaying.
"""

from __future__ import annotations

import mpmath

from .arith import RationalLike, as_rational
from .ball import Ball, arb_from_mpf, working_precision
from .errors import DomainError, InvalidInput, NoConvergence

MAX_LEVEL = 14


def _node(u, alpha, beta, gamma, t, pi):
    v = pi * mpmath.sinh(u)
    if v >= 0:
        ev = mpmath.exp(-v)
        log_x = -mpmath.log1p(ev)
        log_1mx = -(v + mpmath.log1p(ev))
        x = 1 / (1 + ev)
    else:
        ev = mpmath.exp(v)
        log_x = v - mpmath.log1p(ev)
        log_1mx = -mpmath.log1p(ev)
        x = ev / (1 + ev)
    w = mpmath.exp(alpha * log_x + beta * log_1mx) * pi * mpmath.cosh(u)
    if gamma and t:
        w *= (1 - t * x) ** (-gamma)
    return w


def de_quad(alpha: RationalLike, beta: RationalLike, gamma: RationalLike = 0,
            t: RationalLike = 0, prec: int = 64, *, max_level: int = MAX_LEVEL) -> Ball:
    """Heuristic ball for the integral; the radius is the last level-to-level change."""
    alpha, beta, gamma, t = (as_rational(v) for v in (alpha, beta, gamma, t))
    if alpha <= 0 or beta <= 0:
        raise InvalidInput("need alpha, beta > 0 for an integrable endpoint singularity")
    if not 0 <= t < 1:
        raise DomainError("t must lie in [0, 1)")
    wp = prec + 20
    with mpmath.workprec(wp):
        a, b, g = (mpmath.mpf(v.numerator) / v.denominator for v in (alpha, beta, gamma))
        tt = mpmath.mpf(t.numerator) / t.denominator
        pi = mpmath.pi
        # the transformed integrand decays like exp(-min(α, β) π sinh|u|)
        umax = mpmath.asinh((wp + 10) * mpmath.log(2) / (pi * min(a, b))) + 1
        h = mpmath.mpf(1)
        total = _node(mpmath.mpf(0), a, b, g, tt, pi)
        k = 1
        while k * h <= umax:
            total += _node(k * h, a, b, g, tt, pi) + _node(-k * h, a, b, g, tt, pi)
            k += 1
        estimate = total * h
        tol = mpmath.mpf(2) ** (-(prec + 2))
        for _ in range(max_level):
            h /= 2
            k = 1
            while k * h <= umax:
                total += _node(k * h, a, b, g, tt, pi) + _node(-k * h, a, b, g, tt, pi)
                k += 2
            new = total * h
            diff = abs(new - estimate)
            estimate = new
            if diff <= tol * abs(new):
                rad = diff + abs(new) * mpmath.mpf(2) ** (-prec)
                with working_precision(wp):
                    val = arb_from_mpf(new, rad=arb_from_mpf(rad))
                return Ball(val, prec, heuristic=True)
    raise NoConvergence(f"tanh-sinh did not converge within {max_level} levels")
