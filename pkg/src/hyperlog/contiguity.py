"""Contiguity operators on exact truncated 3F2 series and index-shift planning.

Four operators move one parameter of 3F2(a1,a2,a3; b1,b2; x) by one unit:

* ``LowerB``: ``(b1-1) F(b1-1) = (b1 - 1 + x d/dx) F``
* ``RaiseA``: ``a1 F(a1+1) = (a1 + x d/dx) F``
* ``RaiseB``: ``(a2-b1)(a1-b1)(a3-b1) F(b1+1) = θ1 F``
* ``LowerA``: ``(a1-b1)(a1-b2) F(a1-1) = θ2 F``

with the second-order operators

    θ1 = K + b1 (b2 + (b1 - a - 1) x) d/dx + b1 (x - x^2) d²/dx²
    θ2 = (a1-b1)(a1-b2) - a2 a3 x + ((b1+b2-a1) - (a2+a3+1) x) x d/dx + (1-x) x² d²/dx²

where ``a = a1+a2+a3`` and ``K = -a1 a2 a3 + (a2-b1)(a1-b1)(a3-b1)``. The targeted
parameter is moved into position a1 (or b1) first; 3F2 is symmetric in each group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .arith import RationalLike, as_rational, is_integer
from .ball import Ball
from .criteria import HGParams
from .errors import (
    BadLowerParameter,
    InsufficientOrder,
    InvalidInput,
    NoValidPlan,
    ZeroPrefactor,
)
from .hypergeom import pfq, pfq_derivative
from .series import SeriesSpec, TruncatedSeries, series_expand


class OpKind(str, Enum):
    LOWER_B = "LowerB"
    RAISE_A = "RaiseA"
    RAISE_B = "RaiseB"
    LOWER_A = "LowerA"

    @property
    def acts_on_upper(self) -> bool:
        return self in (OpKind.RAISE_A, OpKind.LOWER_A)

    @property
    def second_order(self) -> bool:
        return self in (OpKind.RAISE_B, OpKind.LOWER_A)

    @property
    def step(self) -> int:
        return 1 if self in (OpKind.RAISE_A, OpKind.RAISE_B) else -1

    @classmethod
    def parse(cls, name: str) -> "OpKind":
        aliases = {"lowerb": cls.LOWER_B, "raisea": cls.RAISE_A, "raiseb": cls.RAISE_B,
                   "theta1": cls.RAISE_B, "lowera": cls.LOWER_A, "theta2": cls.LOWER_A}
        try:
            return aliases[name.lower().replace("-", "").replace("_", "")]
        except KeyError:
            raise InvalidInput(f"unknown operator kind {name!r}") from None


def _move_to_front(values: Sequence[Fraction], slot: int) -> tuple[Fraction, ...]:
    rest = [v for i, v in enumerate(values) if i != slot]
    return (values[slot], *rest)


@dataclass(frozen=True)
class ContiguityOp:
    """One operator application; ``params`` are (a1, a2, a3, b1, b2) with the target first."""

    kind: OpKind
    slot: int
    params: tuple[Fraction, Fraction, Fraction, Fraction, Fraction]

    @classmethod
    def on(cls, kind: OpKind | str, upper: Sequence[RationalLike], lower: Sequence[RationalLike],
           slot: int) -> "ContiguityOp":
        kind = OpKind.parse(kind) if isinstance(kind, str) else kind
        upper = tuple(as_rational(v) for v in upper)
        lower = tuple(as_rational(v) for v in lower)
        if len(upper) != 3 or len(lower) != 2:
            raise InvalidInput("contiguity operators act on 3F2 only")
        if kind.acts_on_upper:
            if not 0 <= slot < 3:
                raise InvalidInput(f"upper slot must be 0, 1 or 2, got {slot}")
            a = _move_to_front(upper, slot)
            return cls(kind, slot, (*a, *lower))
        if not 0 <= slot < 2:
            raise InvalidInput(f"lower slot must be 0 or 1, got {slot}")
        return cls(kind, slot, (*upper, *_move_to_front(lower, slot)))

    def prefactor(self) -> Fraction:
        a1, a2, a3, b1, b2 = self.params
        if self.kind is OpKind.LOWER_B:
            return b1 - 1
        if self.kind is OpKind.RAISE_A:
            return a1
        if self.kind is OpKind.RAISE_B:
            return (a2 - b1) * (a1 - b1) * (a3 - b1)
        return (a1 - b1) * (a1 - b2)

    def source(self, upper, lower) -> bool:
        """Whether (upper, lower) is the parameter set this op was built for."""
        try:
            return ContiguityOp.on(self.kind, upper, lower, self.slot).params == self.params
        except InvalidInput:
            return False

    def shifted(self, upper: Sequence[Fraction], lower: Sequence[Fraction]):
        upper, lower = list(upper), list(lower)
        if self.kind.acts_on_upper:
            upper[self.slot] += self.kind.step
        else:
            lower[self.slot] += self.kind.step
        return tuple(upper), tuple(lower)


def _new_coefficients(op: ContiguityOp, c: Sequence[Fraction]) -> list[Fraction]:
    a1, a2, a3, b1, b2 = op.params
    m = len(c) - 1
    if op.kind is OpKind.LOWER_B:
        return [(b1 - 1 + n) * c[n] for n in range(m + 1)]
    if op.kind is OpKind.RAISE_A:
        return [(a1 + n) * c[n] for n in range(m + 1)]
    if op.kind is OpKind.RAISE_B:
        k = -a1 * a2 * a3 + op.prefactor()
        slope = b1 * (b1 - a1 - a2 - a3 - 1)
        return [(k + slope * n - b1 * n * (n - 1)) * c[n] + b1 * (b2 + n) * (n + 1) * c[n + 1]
                for n in range(m - 1)]
    base = op.prefactor()
    out = []
    for n in range(m - 1):
        term = (base + (b1 + b2 - a1) * n + n * (n - 1)) * c[n]
        if n:
            term -= (a2 * a3 + (a2 + a3 + 1) * (n - 1) + (n - 1) * (n - 2)) * c[n - 1]
        out.append(term)
    return out


def apply_op(op: ContiguityOp, s: TruncatedSeries) -> TruncatedSeries:
    """Exact truncated series of the shifted 3F2.

    First-order operators keep the order M; θ-operators return order M-2.
    """
    spec = s.spec
    if not op.source(spec.upper, spec.lower):
        raise InvalidInput("series parameters do not match the operator's application point")
    pre = op.prefactor()
    if pre == 0:
        raise ZeroPrefactor(f"{op.kind.value} prefactor vanishes at {op.params}")
    if op.kind.second_order and s.order < 2:
        raise InsufficientOrder(f"{op.kind.value} needs order >= 2, got {s.order}")
    upper, lower = op.shifted(spec.upper, spec.lower)
    coeffs = tuple(v / pre for v in _new_coefficients(op, s.coefficients))
    return TruncatedSeries(coeffs, SeriesSpec(upper, lower, len(coeffs) - 1))


# planning -------------------------------------------------------------------

UPPER_SLOTS = {"n1": 0, "n2": 1, "q": 2}
LOWER_SLOTS = {"a": 0, "b": 1}
DEFAULT_STAGES = ("q", "a", "b", "n1", "n2")


@dataclass(frozen=True)
class ShiftPlan:
    base: SeriesSpec
    target: SeriesSpec
    ops: tuple[ContiguityOp, ...] = field(default_factory=tuple)
    stages: tuple[str, ...] = DEFAULT_STAGES

    @property
    def theta_steps(self) -> int:
        return sum(op.kind.second_order for op in self.ops)

    def required_order(self, order: int) -> int:
        return order + 2 * self.theta_steps

    def __len__(self):
        return len(self.ops)


def _stage_ops(stage: str, count: int) -> tuple[OpKind, bool, int, int]:
    if stage in UPPER_SLOTS:
        kind = OpKind.RAISE_A if count > 0 else OpKind.LOWER_A
        return kind, True, UPPER_SLOTS[stage], abs(count)
    kind = OpKind.RAISE_B if count > 0 else OpKind.LOWER_B
    return kind, False, LOWER_SLOTS[stage], abs(count)


def _build(upper, lower, counts: dict[str, int], stages: Sequence[str]) -> list[ContiguityOp]:
    ops = []
    for stage in stages:
        kind, _, slot, reps = _stage_ops(stage, counts[stage])
        for _ in range(reps):
            op = ContiguityOp.on(kind, upper, lower, slot)
            if op.prefactor() == 0:
                raise ZeroPrefactor(f"{kind.value} on {stage} at {op.params}")
            upper, lower = op.shifted(upper, lower)
            if any(is_integer(b) and b <= 0 for b in lower):
                raise BadLowerParameter(f"intermediate lower parameters {lower}")
            ops.append(op)
    return ops


def plan_shift(base: HGParams, n1: int, n2: int, n3: int = 0, n4: int = 0, n5: int = 0) -> ShiftPlan:
    """Operators taking 3F2(1,1,q; a,b) to 3F2(n1, n2, q+n3; a+n4, b+n5)."""
    if n1 < 1 or n2 < 1:
        raise InvalidInput("unit indices n1, n2 must be positive")
    upper = (Fraction(1), Fraction(1), base.q)
    lower = (base.a, base.b)
    counts = {"q": n3, "a": n4, "b": n5, "n1": n1 - 1, "n2": n2 - 1}
    start = SeriesSpec(upper, lower)
    target = SeriesSpec((Fraction(n1), Fraction(n2), base.q + n3), (base.a + n4, base.b + n5))
    orderings = [DEFAULT_STAGES] + [p for p in itertools.permutations(DEFAULT_STAGES) if p != DEFAULT_STAGES]
    for stages in orderings:
        try:
            ops = _build(upper, lower, counts, stages)
        except (ZeroPrefactor, BadLowerParameter):
            continue
        return ShiftPlan(start, target, tuple(ops), tuple(stages))
    raise NoValidPlan(f"every ordering hits a vanishing prefactor for shift {(n1, n2, n3, n4, n5)}")


def execute_plan(plan: ShiftPlan, order: int) -> TruncatedSeries:
    """Target series to ``order``, obtained by transporting the base expansion."""
    s = series_expand(plan.base.with_order(plan.required_order(order)))
    for op in plan.ops:
        s = apply_op(op, s)
    return s


# numeric verification ---------------------------------------------------------

def verify_contiguity(kind: OpKind | str, params: Sequence[RationalLike], x: RationalLike,
                      prec: int = 128) -> Ball:
    """Residual ``prefactor * F(shifted) - L F`` as a ball; the operator targets a1 / b1."""
    kind = OpKind.parse(kind) if isinstance(kind, str) else kind
    a1, a2, a3, b1, b2 = (as_rational(v) for v in params)
    x = as_rational(x)
    upper, lower = (a1, a2, a3), (b1, b2)
    op = ContiguityOp.on(kind, upper, lower, 0)
    pre = op.prefactor()
    if pre == 0:
        raise ZeroPrefactor(f"{kind.value} prefactor vanishes at {op.params}")
    new_upper, new_lower = op.shifted(upper, lower)
    wp = prec + 20
    lhs = pfq(new_upper, new_lower, x, wp) * pre
    f0 = pfq(upper, lower, x, wp)
    f1 = pfq_derivative(upper, lower, x, 1, wp)
    if kind is OpKind.LOWER_B:
        rhs = f0 * (b1 - 1) + f1 * x
    elif kind is OpKind.RAISE_A:
        rhs = f0 * a1 + f1 * x
    else:
        f2 = pfq_derivative(upper, lower, x, 2, wp)
        if kind is OpKind.RAISE_B:
            k = -a1 * a2 * a3 + pre
            rhs = f0 * k + f1 * (b1 * (b2 + (b1 - a1 - a2 - a3 - 1) * x)) + f2 * (b1 * (x - x * x))
        else:
            rhs = (f0 * (pre - a2 * a3 * x) + f1 * (((b1 + b2 - a1) - (a2 + a3 + 1) * x) * x)
                   + f2 * ((1 - x) * x * x))
    return Ball.of(lhs - rhs, prec)
