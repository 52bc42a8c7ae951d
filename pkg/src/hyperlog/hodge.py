"""Gauss-type character data, Hodge numbers, and the Gauss-Manin connection of the ω/η frame.

The connection acts on row vectors: ``(∇ω, ∇η) = dt ⊗ (ω, η) M(t)``. A change of
frame ``(ω, η) G`` transforms ``M`` into ``G^{-1} (M G + G')``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import RationalLike, as_rational, denominator_lcm, frac, is_integer, unit_classes
from .errors import InvalidInput, NotGaussType
from .polynomial import Mat2, RF


@dataclass(frozen=True)
class GaussTypeData:
    N: int
    a: int
    b: int
    n: int
    d: int
    d1: int
    d2: int
    a_n: int
    b_n: int
    c_n: int
    alpha_n: Fraction
    beta_n: Fraction

    def riemann_scheme(self) -> "RiemannScheme":
        return RiemannScheme.from_exponents(self.alpha_n, self.beta_n)


def gauss_type_data(N: int, a: int, b: int, n: int, d: int) -> GaussTypeData:
    """Data of the curve ``y^N = x^a (1-x)^b (1-tx)^(N-b)`` and the character ``ζ -> ζ^-n``."""
    if N < 2 or not (0 < a < N and 0 < b < N):
        raise InvalidInput(f"need 0 < a, b < N, got N={N}, a={a}, b={b}")
    if math.gcd(N, math.gcd(a, b)) != 1:
        raise InvalidInput("gcd(N, a, b) must be 1")
    if math.gcd(n, N) != 1:
        raise InvalidInput("gcd(n, N) must be 1")
    if d < 1 or N % d:
        raise InvalidInput(f"d = {d} must divide N = {N}")
    if (a * d) % N == 0 or (b * d) % N == 0:
        raise NotGaussType(f"ad = {a * d} or bd = {b * d} vanishes modulo {N}")
    b_n = b * n // N
    return GaussTypeData(
        N=N, a=a, b=b, n=n, d=d,
        d1=math.gcd(N, a),
        d2=math.gcd(N, b),
        a_n=a * n // N,
        b_n=b_n,
        c_n=n - b_n - 1,
        alpha_n=frac(Fraction(-a * n, N)),
        beta_n=frac(Fraction(-b * n, N)),
    )


@dataclass(frozen=True)
class RiemannScheme:
    at_0: tuple[Fraction, Fraction]
    at_1: tuple[Fraction, Fraction]
    at_inf: tuple[Fraction, Fraction]

    @classmethod
    def from_exponents(cls, alpha: Fraction, beta: Fraction) -> "RiemannScheme":
        return cls((Fraction(0), 1 - alpha - beta), (Fraction(0), Fraction(0)), (alpha, beta))

    def exponent_sum(self) -> Fraction:
        return sum(self.at_0) + sum(self.at_1) + sum(self.at_inf)


@dataclass(frozen=True)
class HodgeInput:
    mu: Fraction
    beta1: Fraction
    beta2: Fraction

    def __post_init__(self):
        for name in ("mu", "beta1", "beta2"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if is_integer(self.mu):
            raise InvalidInput(f"mu = {self.mu} is an integer")
        for beta in (self.beta1, self.beta2):
            if is_integer(beta - self.mu):
                raise InvalidInput(f"beta - mu = {beta - self.mu} is an integer")

    @property
    def modulus(self) -> int:
        return denominator_lcm((self.mu, self.beta1, self.beta2))

    def scaled(self, s: int) -> "HodgeInput":
        return HodgeInput(s * self.mu, s * self.beta1, s * self.beta2)


def delta_decomposition(h: HodgeInput) -> tuple[Fraction, Fraction]:
    """``δ_i = {β_i} + {-μ} - {β_i - μ}``; each is 0 or 1."""
    return tuple(frac(beta) + frac(-h.mu) - frac(beta - h.mu) for beta in (h.beta1, h.beta2))


def d_chi(h: HodgeInput) -> int:
    value = 2 * frac(-h.mu) + sum(frac(beta) - frac(beta - h.mu) for beta in (h.beta1, h.beta2))
    if value.denominator != 1 or value not in (0, 1, 2):
        raise AssertionError(f"d_chi evaluated to {value}, outside {{0, 1, 2}}")
    return int(value)


@dataclass(frozen=True)
class HodgeTriple:
    h20: int
    h11: int
    h02: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h20, self.h11, self.h02)


_HODGE_TABLE = {2: HodgeTriple(1, 1, 0), 1: HodgeTriple(0, 2, 0), 0: HodgeTriple(0, 1, 1)}


def hodge_triple(d: int) -> HodgeTriple:
    try:
        return _HODGE_TABLE[d]
    except KeyError:
        raise InvalidInput(f"d_chi must be 0, 1 or 2, got {d}") from None


def d_chi_profile(h: HodgeInput) -> dict[int, int]:
    """``d_chi`` of ``(s μ, s β1, s β2)`` for every unit s of the joint modulus."""
    return {s.residue: d_chi(h.scaled(s.residue)) for s in unit_classes(h.modulus)}


def tate_check(h: HodgeInput) -> bool:
    return all(v == 1 for v in d_chi_profile(h).values())


# Gauss-Manin connection ------------------------------------------------------

def _t() -> RF:
    return RF.var()


def connection_matrix(beta1: RationalLike, beta2: RationalLike) -> Mat2:
    b1, b2 = as_rational(beta1), as_rational(beta2)
    if is_integer(b1) or is_integer(b2):
        raise InvalidInput("beta_i must not be integers")
    t = _t()
    return Mat2.of([[0, b2 / t], [b1 / (1 - t), -(b1 + b2) / t]])


def canonical_frame(beta1: RationalLike, beta2: RationalLike, point: int) -> Mat2:
    """Columns express the canonical-extension frame in terms of (ω, η)."""
    b1, b2 = as_rational(beta1), as_rational(beta2)
    if not (0 < b1 < 1 and 0 < b2 < 1):
        raise InvalidInput("beta_i must lie in (0, 1)")
    t = _t()
    if point == 1:
        return Mat2.identity()
    if point != 0:
        raise InvalidInput("point must be 0 or 1")
    s = b1 + b2
    if s <= 1:
        return Mat2.of([[1, t * b2], [0, t * s]])
    return Mat2.of([[t, s - 1], [0, t * b1]])


def gauge_transform(m: Mat2, g: Mat2) -> Mat2:
    return g.inverse() @ (m @ g + g.derivative())


def residue_in_frame(beta1: RationalLike, beta2: RationalLike, point: int) -> list[list[Fraction]]:
    m = gauge_transform(connection_matrix(beta1, beta2), canonical_frame(beta1, beta2, point))
    return m.residue_at(point)


@dataclass(frozen=True)
class Spectrum:
    """Eigen-data of a constant 2x2 rational matrix."""

    trace: Fraction
    det: Fraction
    eigenvalues: tuple[Fraction, Fraction] | None

    def in_half_open_unit(self) -> bool:
        """Both eigenvalues real and in [0, 1), decided from the characteristic polynomial."""
        if self.eigenvalues is not None:
            return all(0 <= e < 1 for e in self.eigenvalues)
        tr, dt = self.trace, self.det
        disc = tr * tr - 4 * dt
        if disc < 0:
            return False
        char_at_1 = 1 - tr + dt
        return dt >= 0 and char_at_1 > 0 and 0 <= tr / 2 < 1


def _rational_sqrt(r: Fraction) -> Fraction | None:
    if r < 0:
        return None
    n, d = math.isqrt(r.numerator), math.isqrt(r.denominator)
    if n * n == r.numerator and d * d == r.denominator:
        return Fraction(n, d)
    return None


def spectrum(m: list[list[Fraction]]) -> Spectrum:
    (a, b), (c, d) = m
    tr, dt = a + d, a * d - b * c
    root = _rational_sqrt(tr * tr - 4 * dt)
    eig = None if root is None else tuple(sorted(((tr - root) / 2, (tr + root) / 2)))
    return Spectrum(tr, dt, eig)


def residue_eigenvalues_in_frame(beta1: RationalLike, beta2: RationalLike, point: int) -> Spectrum:
    return spectrum(residue_in_frame(beta1, beta2, point))
