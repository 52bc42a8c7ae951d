"""Univariate polynomials and rational functions over Q, plus 2x2 matrices of them.

A :class:`Poly` is stored as a primitive integer coefficient vector together with a
positive integer denominator, so equal polynomials have bit-identical state. A
:class:`RationalFunction` keeps numerator and denominator coprime with a monic
denominator; equality is therefore structural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .arith import as_rational

Scalar = Union[int, Fraction]

# below this length schoolbook convolution beats Kronecker packing
_KRONECKER_CUTOFF = 24


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pack(coeffs: Sequence[int], nbytes: int) -> int:
    pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _kronecker(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = len(a) + len(b) - 1
    bound = max(map(abs, a)).bit_length() + max(map(abs, b)).bit_length()
    bound += min(len(a), len(b)).bit_length() + 2
    nbytes = (bound + 7) // 8
    k = 8 * nbytes
    prod = _pack(a, nbytes) * _pack(b, nbytes)
    raw = prod.to_bytes(nbytes * (n + 1), "little", signed=True)
    half, full = 1 << (k - 1), 1 << k
    out, carry = [], 0
    for i in range(n):
        d = int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") + carry
        if d >= half:
            d -= full
            carry = 1
        else:
            carry = 0
        out.append(d)
    return out


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if min(len(a), len(b)) < _KRONECKER_CUTOFF:
        return _schoolbook(a, b)
    return _kronecker(a, b)


class Poly:
    """Dense polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        fr = [as_rational(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        self._set([c.numerator * (den // c.denominator) for c in fr], den)

    @classmethod
    def _raw(cls, nums: list[int], den: int) -> "Poly":
        obj = cls.__new__(cls)
        obj._set(nums, den)
        return obj

    def _set(self, nums: list[int], den: int) -> None:
        while nums and nums[-1] == 0:
            nums.pop()
        if not nums:
            self._num, self._den = (), 1
            return
        if den < 0:
            nums, den = [-c for c in nums], -den
        g = math.gcd(den, *nums)
        if g > 1:
            nums = [c // g for c in nums]
            den //= g
        self._num, self._den = tuple(nums), den

    # constructors
    @classmethod
    def x(cls) -> "Poly":
        return cls._raw([0, 1], 1)

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls([c])

    # structure
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._num) - 1

    def is_zero(self) -> bool:
        return not self._num

    def leading(self) -> Fraction:
        return Fraction(self._num[-1], self._den) if self._num else Fraction(0)

    def monic(self) -> "Poly":
        if not self._num:
            return self
        return Poly._raw([c * 1 for c in self._num], self._num[-1])

    def content_parts(self) -> tuple[tuple[int, ...], int]:
        """Primitive integer numerator vector and positive denominator."""
        return self._num, self._den

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def __bool__(self):
        return bool(self._num)

    # arithmetic
    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        d1, d2 = self._den, other._den
        g = math.gcd(d1, d2)
        m1, m2 = d2 // g, d1 // g
        a, b = self._num, other._num
        n = max(len(a), len(b))
        out = [
            (a[i] * m1 if i < len(a) else 0) + (b[i] * m2 if i < len(b) else 0)
            for i in range(n)
        ]
        return Poly._raw(out, d1 * m1)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Poly._raw([x * c.numerator for x in self._num], self._den * c.denominator)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._num or not other._num:
            return Poly()
        return Poly._raw(_convolve(self._num, other._num), self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other._num:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        b = other.coeffs
        db, lb = len(b) - 1, b[-1]
        q = [Fraction(0)] * max(len(r) - db, 0)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] / lb
            if c:
                q[i - db] = c
                for j in range(db + 1):
                    r[i - db + j] -= c * b[j]
        return Poly(q), Poly(r[:db] if db else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd (zero only when both inputs are zero)."""
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1].monic()
        return a.monic()

    def derivative(self) -> "Poly":
        return Poly._raw([i * c for i, c in enumerate(self._num)][1:], self._den)

    def __call__(self, x: Scalar) -> Fraction:
        x = as_rational(x)
        p, q = x.numerator, x.denominator
        d = len(self._num) - 1
        acc = 0
        qpow = 1
        # sum c_i p^i q^(d-i), accumulated by Horner in p with running q powers
        for c in reversed(self._num):
            acc = acc * p + c * qpow
            qpow *= q
        if d < 0:
            return Fraction(0)
        return Fraction(acc, self._den * q ** d)

    def shift_var(self, k: int) -> "Poly":
        """Multiply by ``x**k``."""
        return Poly._raw([0] * k + list(self._num), self._den)

    def format(self, var: str = "x") -> str:
        if not self._num:
            return "0"
        parts = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and c in (1, -1):
                term = ("-" if c < 0 else "") + mono
            else:
                term = str(c) + (f"*{mono}" if mono else "")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.format()})"


class RationalFunction:
    """Reduced quotient of two :class:`Poly` with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Union[Poly, Scalar], den: Union[Poly, Scalar] = 1, *, reduce: bool = True):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = den if isinstance(den, Poly) else Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly.const(1)
        else:
            if reduce and den.degree > 0:
                g = num.gcd(den)
                if g.degree > 0:
                    num, den = num // g, den // g
            lc = den.leading()
            if lc != 1:
                num, den = num * (1 / lc), den * (1 / lc)
        self.num = num
        self.den = den

    @classmethod
    def var(cls) -> "RationalFunction":
        return cls(Poly.x())

    @classmethod
    def const(cls, c: Scalar) -> "RationalFunction":
        return cls(Poly.const(c))

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.const(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_constant():
            return RationalFunction(self.num * other.num.leading(), self.den, reduce=False) if other.num else RationalFunction(0)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num, reduce=False)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k, reduce=False)

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, x: Scalar) -> Fraction:
        dv = self.den(x)
        if not dv:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / dv

    def residue_at(self, point: Scalar) -> Fraction:
        """Value of ``(t - point) * f`` at ``point``; requires at most a simple pole there."""
        point = as_rational(point)
        return (self * Poly([-point, 1]))(point)

    def format(self, var: str = "x") -> str:
        if self.den.degree == 0:
            return self.num.format(var)
        return f"({self.num.format(var)})/({self.den.format(var)})"

    def __repr__(self):
        return f"RationalFunction({self.format()})"


RF = RationalFunction


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix ``[[a, b], [c, d]]`` of rational functions."""

    a: RationalFunction
    b: RationalFunction
    c: RationalFunction
    d: RationalFunction

    @classmethod
    def of(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        co = RationalFunction._coerce
        return cls(co(a), co(b), co(c), co(d))

    @classmethod
    def identity(cls) -> "Mat2":
        return cls.of([[1, 0], [0, 1]])

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def scale(self, f) -> "Mat2":
        return Mat2(self.a * f, self.b * f, self.c * f, self.d * f)

    def trace(self) -> RationalFunction:
        return self.a + self.d

    def det(self) -> RationalFunction:
        return det2(self)

    def inverse(self) -> "Mat2":
        dt = self.det()
        if dt.is_zero():
            raise ZeroDivisionError("singular matrix")
        inv = dt.inverse()
        return Mat2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def derivative(self) -> "Mat2":
        return Mat2(self.a.derivative(), self.b.derivative(), self.c.derivative(), self.d.derivative())

    def evaluate(self, x: Scalar):
        return [[self.a(x), self.b(x)], [self.c(x), self.d(x)]]

    def residue_at(self, point: Scalar):
        """Constant matrix ``lim (t - point) M(t)``."""
        return [[e.residue_at(point) for e in row] for row in self.rows()]

    def to_json(self, var: str = "t"):
        return [[e.format(var) for e in row] for row in self.rows()]


def det2(m: Mat2) -> RationalFunction:
    """Determinant ``ad - bc``, reduced."""
    return m.a * m.d - m.b * m.c
