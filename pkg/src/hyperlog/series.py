"""Exact truncated power series of generalized hypergeometric functions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import RationalLike, as_rational, is_integer
from .errors import BadLowerParameter, InvalidInput


@dataclass(frozen=True)
class SeriesSpec:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    order: int = 1

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(as_rational(v) for v in self.upper))
        object.__setattr__(self, "lower", tuple(as_rational(v) for v in self.lower))
        if self.order < 0:
            raise InvalidInput(f"truncation order must be >= 0, got {self.order}")
        for b in self.lower:
            if is_integer(b) and b <= 0:
                raise BadLowerParameter(f"lower parameter {b} is a non-positive integer")

    def with_order(self, order: int) -> "SeriesSpec":
        return SeriesSpec(self.upper, self.lower, order)


def coefficients(upper, lower, order: int) -> tuple[Fraction, ...]:
    out = [Fraction(1)]
    c = Fraction(1)
    for n in range(order):
        num = Fraction(1)
        for a in upper:
            num *= a + n
        den = Fraction(n + 1)
        for b in lower:
            den *= b + n
        c = c * num / den
        out.append(c)
    return tuple(out)


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_M`` of pFq(upper; lower; x), exact."""

    coefficients: tuple[Fraction, ...]
    spec: SeriesSpec

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def matches_definition(self) -> bool:
        return self.coefficients == coefficients(self.spec.upper, self.spec.lower, self.order)

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def series_expand(spec: SeriesSpec) -> TruncatedSeries:
    return TruncatedSeries(coefficients(spec.upper, spec.lower, spec.order), spec)
