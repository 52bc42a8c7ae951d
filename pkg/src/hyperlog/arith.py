"""Exact rational helpers: parsing, fractional parts, unit classes, Pochhammer symbols.

Rationals are plain :class:`fractions.Fraction` values. They are always reduced,
keep the sign on the numerator and never overflow.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

from .errors import InvalidInput, ModulusMismatch, ParseError

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (ASCII, no whitespace) into a reduced Fraction."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(r: Fraction) -> str:
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise InvalidInput("floats are not accepted in the exact kernel")
    return Fraction(value)


def frac(r: RationalLike) -> Fraction:
    """Fractional part ``r - floor(r)``, always in ``[0, 1)``."""
    r = as_rational(r)
    return r - math.floor(r)


def is_integer(r: Fraction) -> bool:
    return Fraction(r).denominator == 1


def lcm(values: Iterable[int]) -> int:
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)


def denominator_lcm(values: Iterable[RationalLike]) -> int:
    """Smallest N such that every value lies in (1/N)Z."""
    return lcm(as_rational(v).denominator for v in values)


@dataclass(frozen=True, order=True)
class UnitClass:
    """A residue ``s`` modulo ``modulus`` with ``gcd(s, modulus) = 1``.

    For ``modulus == 1`` the single class is represented by ``residue == 1``.
    """

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidInput(f"modulus must be positive, got {self.modulus}")
        if self.modulus == 1:
            if self.residue != 1:
                object.__setattr__(self, "residue", 1)
            return
        s = self.residue % self.modulus
        if math.gcd(s, self.modulus) != 1:
            raise InvalidInput(f"{self.residue} is not a unit modulo {self.modulus}")
        object.__setattr__(self, "residue", s)

    def act(self, r: RationalLike) -> Fraction:
        """Return ``{s r}``; the denominator of ``r`` must divide the modulus."""
        r = as_rational(r)
        if self.modulus % r.denominator:
            raise ModulusMismatch(
                f"denominator {r.denominator} does not divide modulus {self.modulus}"
            )
        return frac(self.residue * r)


def unit_classes(n: int) -> list[UnitClass]:
    """All units of Z/nZ in ascending order (``[1]`` for ``n == 1``)."""
    if n < 1:
        raise InvalidInput(f"modulus must be positive, got {n}")
    if n == 1:
        return [UnitClass(1, 1)]
    return [UnitClass(n, s) for s in range(1, n) if math.gcd(s, n) == 1]


def pochhammer(alpha: RationalLike, n: int) -> Fraction:
    """Rising factorial ``(alpha)_n``."""
    if n < 0:
        raise InvalidInput("pochhammer order must be non-negative")
    alpha = as_rational(alpha)
    out = Fraction(1)
    for k in range(n):
        out *= alpha + k
        if not out:
            break
    return out
