"""Midpoint-radius enclosures backed by Arb (python-flint).

A :class:`Ball` couples an ``arb`` (real) or ``acb`` (complex) enclosure with the
working precision it was produced at and a ``heuristic`` flag for values whose
radius is an error *estimate* (quadrature) rather than a proven bound.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath
from flint import acb, arb, ctx, fmpq, fmpz

from .arith import RationalLike, as_rational
from .errors import BranchCut, DomainError

Number = Union[arb, acb]


@contextlib.contextmanager
def working_precision(bits: int):
    """Run Arb operations at ``bits`` of working precision (restored on exit)."""
    with ctx.workprec(int(bits)):
        yield


def arb_from_rational(r: RationalLike) -> arb:
    r = as_rational(r)
    return arb(fmpq(r.numerator, r.denominator))


def arb_from_mpf(x: mpmath.mpf, rad=0) -> arb:
    # mpmath.mpf(x) would re-round to the ambient precision
    man, exp = (x if isinstance(x, mpmath.mpf) else mpmath.mpf(x)).man_exp
    man = arb(fmpz(int(man)))
    mid = man * arb(2) ** exp if exp >= 0 else man / arb(2) ** (-exp)
    return arb(mid=mid, rad=rad) if rad else mid


@dataclass(frozen=True)
class Ball:
    value: Number
    prec: int
    heuristic: bool = False

    # construction ---------------------------------------------------------
    @classmethod
    def exact(cls, r: RationalLike, prec: int) -> "Ball":
        with working_precision(prec):
            return cls(arb_from_rational(r), prec)

    @classmethod
    def of(cls, x, prec: int, heuristic: bool = False) -> "Ball":
        if isinstance(x, Ball):
            return cls(x.value, prec, heuristic or x.heuristic)
        if isinstance(x, (arb, acb)):
            return cls(x, prec, heuristic)
        if isinstance(x, (int, Fraction, str)):
            return cls.exact(x, prec)
        raise TypeError(f"cannot build a Ball from {type(x).__name__}")

    # inspection ------------------------------------------------------------
    @property
    def is_real(self) -> bool:
        return isinstance(self.value, arb)

    def real(self) -> "Ball":
        return Ball(self.value if self.is_real else self.value.real, self.prec, self.heuristic)

    def imag(self) -> "Ball":
        return Ball(arb(0) if self.is_real else self.value.imag, self.prec, self.heuristic)

    def radius(self) -> arb:
        """Upper bound on the distance from the midpoint to any enclosed point."""
        if self.is_real:
            return arb(self.value.rad())
        return arb(self.value.real.rad()) + arb(self.value.imag.rad())

    def magnitude(self) -> arb:
        """Upper bound on ``|z|`` over the ball."""
        return self.value.abs_upper()

    def contains(self, other) -> bool:
        # exact rationals and mpf values are rounded far below the ball's own radius
        if isinstance(other, Ball):
            other = other.value
        elif isinstance(other, (int, Fraction, str)):
            with working_precision(self.prec + 64):
                other = arb_from_rational(other)
        elif isinstance(other, mpmath.mpf):
            with working_precision(max(self.prec, mpmath.mp.prec) + 64):
                other = arb_from_mpf(other)
        if self.is_real and isinstance(other, acb):
            return other.imag.is_zero() and self.value.contains(other.real)
        if not self.is_real and isinstance(other, arb):
            other = acb(other)
        return bool(self.value.contains(other))

    def contains_zero(self) -> bool:
        return self.contains(0)

    def overlaps(self, other: "Ball") -> bool:
        a, b = self.value, other.value
        if isinstance(a, arb) and isinstance(b, acb):
            a = acb(a)
        if isinstance(b, arb) and isinstance(a, acb):
            b = acb(b)
        return bool(a.overlaps(b))

    def mid_str(self, digits: int = 30) -> str:
        if self.is_real:
            return self.value.mid().str(digits, radius=False)
        re = self.value.real.mid().str(digits, radius=False)
        im = self.value.imag.mid().str(digits, radius=False)
        return f"{re} + {im}j"

    def rad_str(self, digits: int = 5) -> str:
        return self.radius().str(digits, radius=False)

    def to_json(self, digits: int = 30) -> dict:
        return {"mid": self.mid_str(digits), "rad": self.rad_str(), "bits": self.prec,
                "heuristic": self.heuristic}

    def __str__(self):
        return f"{self.value}"

    # arithmetic -------------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Ball):
            return other.value, min(self.prec, other.prec), self.heuristic or other.heuristic
        if isinstance(other, (int, Fraction)):
            with working_precision(self.prec):
                return arb_from_rational(other), self.prec, self.heuristic
        return NotImplemented, 0, False

    def _binary(self, other, op):
        v, prec, heur = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        with working_precision(prec):
            return Ball(op(self.value, v), prec, heur)

    def __add__(self, o):
        return self._binary(o, lambda a, b: a + b)

    def __radd__(self, o):
        return self._binary(o, lambda a, b: b + a)

    def __sub__(self, o):
        return self._binary(o, lambda a, b: a - b)

    def __rsub__(self, o):
        return self._binary(o, lambda a, b: b - a)

    def __mul__(self, o):
        return self._binary(o, lambda a, b: a * b)

    def __rmul__(self, o):
        return self._binary(o, lambda a, b: b * a)

    def __truediv__(self, o):
        return self._binary(o, lambda a, b: a / b)

    def __rtruediv__(self, o):
        return self._binary(o, lambda a, b: b / a)

    def __neg__(self):
        return Ball(-self.value, self.prec, self.heuristic)

    def as_complex(self) -> "Ball":
        return self if not self.is_real else Ball(acb(self.value), self.prec, self.heuristic)

    def map(self, fn) -> "Ball":
        with working_precision(self.prec):
            return Ball(fn(self.value), self.prec, self.heuristic)


def _straddles_cut(z: acb) -> bool:
    # the principal branch is continuous from above on (-inf, 0]; an exactly zero
    # imaginary part is fine, a fuzzy one is not
    re, im = z.real, z.imag
    return (not re > 0) and im.contains(0) and not im.is_zero()


def principal_log(z: Ball) -> Ball:
    """Principal logarithm, argument in (-π, π]."""
    v = z.value
    if z.is_real and v > 0:
        return z.map(lambda x: x.log())
    c = v if isinstance(v, acb) else acb(v)
    if c.contains(0):
        raise DomainError("logarithm of a ball containing 0")
    if _straddles_cut(c):
        raise BranchCut(f"ball {c} straddles the negative real axis")
    with working_precision(z.prec):
        return Ball(c.log(), z.prec, z.heuristic)


def rational_power(base: Ball, exponent: RationalLike, branch: str = "principal") -> Ball:
    """``base ** exponent`` for a rational exponent.

    ``branch="principal"`` uses ``exp(e * Log(base))``. ``branch="real"`` needs a real
    base and an odd exponent denominator and returns the real root, e.g.
    ``(-1/8) ** (1/3) = -1/2``.
    """
    e = as_rational(exponent)
    v = base.value
    if e == 0:
        return Ball.exact(1, base.prec)
    if branch == "real":
        if not base.is_real:
            raise DomainError("real-root policy needs a real base")
        if e.denominator % 2 == 0:
            raise DomainError("real-root policy needs an odd exponent denominator")
        with working_precision(base.prec):
            ee = arb_from_rational(e)
            if v > 0:
                return Ball((v.log() * ee).exp(), base.prec, base.heuristic)
            if v < 0:
                mag = ((-v).log() * ee).exp()
                return Ball(-mag if e.numerator % 2 else mag, base.prec, base.heuristic)
        raise DomainError("sign of the base is undetermined")
    if branch != "principal":
        raise ValueError(f"unknown branch policy {branch!r}")
    if base.is_real and v > 0:
        with working_precision(base.prec):
            return Ball((v.log() * arb_from_rational(e)).exp(), base.prec, base.heuristic)
    lg = principal_log(base.as_complex())
    with working_precision(base.prec):
        return Ball((lg.value * arb_from_rational(e)).exp(), base.prec, base.heuristic)
