"""Closed-form logarithmic expression for 3F2(1,1,1/2; 7/6,11/6; x) on (0, 1).

The three numbers ``e_j = 1/2 + t_j`` come from the roots of the depressed cubic
``4x t^3 - 3x t - (x - 2) = 0`` written in Cardano form ``t = u + v`` with
``u^3 = (-1/4 + x/8 + sqrt(1-x)/4) / x``, ``v^3 = (-1/4 + x/8 - sqrt(1-x)/4) / x`` and
``uv = 1/4``. Both radicands are negative on (0, 1), so u and v are real cube roots
and the complex pair is obtained with ``ω = exp(2πi/3)``.

The right-hand side combines ``p± = ((1 ± sqrt(1-x)) / sqrt(x))^(2/3)`` and
``q_j = (1 - sqrt(3x) e_j) / (1 + sqrt(3x) e_j)`` through principal logarithms.
Logarithms of quotients are taken as differences ``Log q_i - Log q_j``; the principal
logarithm of the single quotient ``q_i / q_j`` differs by a multiple of 2πi on most
of (0, 1), which :func:`branch_diagnostic` makes visible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from flint import acb, arb

from .arith import RationalLike, as_rational
from .ball import Ball, arb_from_rational, principal_log, working_precision
from .errors import DegenerateDenominator, DomainError, InvalidInput
from .hypergeom import pfq

GUARD = 40
UPPER = (Fraction(1), Fraction(1), Fraction(1, 2))
LOWER = (Fraction(7, 6), Fraction(11, 6))
LOG_CONVENTIONS = ("difference", "ratio")


@dataclass(frozen=True)
class CubicRootData:
    x: Fraction
    u: Ball
    v: Ball
    e: tuple[Ball, Ball, Ball]
    p_plus: Ball
    p_minus: Ball
    q: tuple[Ball, Ball, Ball]

    def cubic_residuals(self) -> list[Ball]:
        """``4x t^3 - 3x t - (x-2)`` at ``t = e_j - 1/2``."""
        out = []
        for e in self.e:
            t = e - Fraction(1, 2)
            out.append(t * t * t * (4 * self.x) - t * (3 * self.x) - (self.x - 2))
        return out


def _real_cbrt(v: arb) -> arb:
    if v < 0:
        return -((-v).root(3))
    if v > 0:
        return v.root(3)
    raise DomainError("cube-root radicand has undetermined sign")


def _omega(k: int) -> acb:
    # exp(2πik/3)
    return (acb(0, 2) * arb.pi() * k / 3).exp()


def _cardano_pairs(u: arb, v: arb) -> list[acb]:
    """The three values ``1/2 + ω^k u + ω^-k v``, k = 0, 1, 2 in the order (0, -1, 1)."""
    half = arb(1) / 2
    out = [acb(half + u + v)]
    for k in (-1, 1):
        out.append(half + _omega(k) * u + _omega(-k) * v)
    return out


def build_roots(x: RationalLike, prec: int = 192, order=(0, 1, 2)) -> CubicRootData:
    """Cube-root data at ``x``; ``order`` permutes the roots assigned to (e1, e2, e3)."""
    x = as_rational(x)
    if not 0 < x < 1:
        raise DomainError(f"x = {x} must lie strictly inside (0, 1)")
    if sorted(order) != [0, 1, 2]:
        raise InvalidInput(f"order must be a permutation of (0, 1, 2), got {order}")
    wp = prec + GUARD
    with working_precision(wp):
        xv = arb_from_rational(x)
        root = (1 - xv).sqrt()
        base = -arb(1) / 4 + xv / 8
        x_cbrt = xv.root(3)
        u = _real_cbrt(base + root / 4) / x_cbrt
        v = _real_cbrt(base - root / 4) / x_cbrt
        roots = _cardano_pairs(u, v)
        e = [roots[i] for i in order]
        # e1 stays real when the real root is assigned to it
        e = [acb(z.real) if z.imag.is_zero() else z for z in e]
        sx = xv.sqrt()
        two_thirds = arb_from_rational(Fraction(2, 3))
        p_plus = (((1 + root) / sx).log() * two_thirds).exp()
        p_minus = (((1 - root) / sx).log() * two_thirds).exp()
        s3x = (3 * xv).sqrt()
        q = []
        for ej in e:
            den = 1 + s3x * ej
            if den.contains(0):
                raise DegenerateDenominator("1 + sqrt(3x) e_j contains 0")
            q.append((1 - s3x * ej) / den)

    def ball(z):
        if isinstance(z, acb) and z.imag.is_zero():
            z = z.real
        return Ball(z, wp)

    return CubicRootData(
        x=x, u=ball(u), v=ball(v), e=tuple(ball(z) for z in e),
        p_plus=Ball(p_plus, wp), p_minus=Ball(p_minus, wp),
        q=tuple(ball(z) for z in q),
    )


def _log_quotient(a: Ball, b: Ball, convention: str) -> Ball:
    if convention == "difference":
        return principal_log(a) - principal_log(b)
    if convention == "ratio":
        return principal_log((a / b).as_complex())
    raise InvalidInput(f"unknown log convention {convention!r}")


def explicit_rhs(x: RationalLike, prec: int = 192, *, convention: str = "difference",
                 order=(0, 1, 2)) -> Ball:
    data = build_roots(x, prec, order)
    wp = prec + GUARD
    q1, q2, q3 = (q.as_complex() for q in data.q)
    l12 = _log_quotient(q1, q2, convention)
    l23 = _log_quotient(q2, q3, convention)
    with working_precision(wp):
        rot = (acb(0, 1) * arb.pi() / 3).exp()
        pp, pm = data.p_plus.value, data.p_minus.value
        bracket = (pp + pm) * l12.value + (rot * pp + rot.conjugate() * pm) * l23.value
        xv = arb_from_rational(data.x)
        scale = 5 * arb(3).sqrt() / 36 / xv.sqrt()
        value = scale * bracket
    return Ball(value, wp)


def explicit_residual(x: RationalLike, prec: int = 192, *, convention: str = "difference",
                      order=(0, 1, 2)) -> Ball:
    """``3F2(1,1,1/2; 7/6,11/6; x) - rhs(x)``; complex, its imaginary part should vanish too."""
    lhs = pfq(UPPER, LOWER, as_rational(x), prec + GUARD)
    rhs = explicit_rhs(x, prec, convention=convention, order=order)
    return Ball.of(lhs.as_complex() - rhs, prec)


@dataclass(frozen=True)
class BranchOutcome:
    order: tuple[int, int, int]
    convention: str
    residual: Ball | None
    error: str | None = None

    @property
    def vanishes(self) -> bool:
        return self.residual is not None and self.residual.contains_zero()


def branch_diagnostic(x: RationalLike, prec: int = 128) -> list[BranchOutcome]:
    """Residual for every assignment of the three roots and both log conventions."""
    out = []
    for order, conv in itertools.product(itertools.permutations(range(3)), LOG_CONVENTIONS):
        try:
            res = explicit_residual(x, prec, convention=conv, order=order)
            out.append(BranchOutcome(tuple(order), conv, res))
        except (DomainError, DegenerateDenominator) as exc:
            out.append(BranchOutcome(tuple(order), conv, None, str(exc)))
    return out
