"""Fractional-part criteria for 3F2(1,1,q; a,b; x) and the Beukers-Heckman interlacing test.

All quantifiers over the profinite units are decided on the finite quotient
(Z/NZ)^x, where N is the lcm of the denominators of the parameters involved.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arith import (
    RationalLike,
    UnitClass,
    as_rational,
    denominator_lcm,
    format_rational,
    frac,
    is_integer,
    parse_rational,
    unit_classes,
)
from .errors import InvalidInput, ModulusMismatch, TieObserved

LABELS = ("FailsPreconditions", "LogFunctional", "LogAtOneOnly", "None")


@dataclass(frozen=True)
class HGParams:
    """Parameters of 3F2(1,1,q; a,b; x). Invalid triples are representable."""

    q: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self):
        for name in ("q", "a", "b"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def parse(cls, q: RationalLike, a: RationalLike, b: RationalLike) -> "HGParams":
        return cls(as_rational(q), as_rational(a), as_rational(b))

    @property
    def modulus(self) -> int:
        return denominator_lcm((self.q, self.a, self.b))

    def swapped(self) -> "HGParams":
        return HGParams(self.q, self.b, self.a)


def check_preconditions(p: HGParams) -> list[str]:
    """Names of the quantities among q, a, b, q-a, q-b, q-a-b that are integers."""
    quantities = {
        "q": p.q,
        "a": p.a,
        "b": p.b,
        "q-a": p.q - p.a,
        "q-b": p.q - p.b,
        "q-a-b": p.q - p.a - p.b,
    }
    return [name for name, v in quantities.items() if is_integer(v)]


def _check_modulus(p: HGParams, s: UnitClass) -> None:
    if s.modulus != p.modulus:
        raise ModulusMismatch(f"unit class modulus {s.modulus} != parameter modulus {p.modulus}")


def _require_valid(p: HGParams) -> None:
    bad = check_preconditions(p)
    if bad:
        raise InvalidInput(f"preconditions violated: {', '.join(bad)} integral")


def eq1_sum(p: HGParams, s: UnitClass) -> Fraction:
    """``{sa} + {sb} + 2{-sq} - {s(a-q)} - {s(b-q)}``."""
    act = s.act
    return act(p.a) + act(p.b) + 2 * act(-p.q) - act(p.a - p.q) - act(p.b - p.q)


def eq1_interlace(p: HGParams, s: UnitClass) -> bool:
    """Strict bracketing ``min({sa},{sb}) < {sq} < max({sa},{sb})``.

    A tie between {sq} and {sa} or {sb} is impossible under the preconditions
    and raises :class:`TieObserved`.
    """
    sa, sb, sq = s.act(p.a), s.act(p.b), s.act(p.q)
    if sq == sa or sq == sb:
        raise TieObserved(f"{{sq}} = {sq} coincides with {{sa}} = {sa} or {{sb}} = {sb} at s = {s.residue}")
    return min(sa, sb) < sq < max(sa, sb)


def eq1_holds_at(p: HGParams, s: UnitClass) -> bool:
    _require_valid(p)
    _check_modulus(p, s)
    if s.act(p.q) in (s.act(p.a), s.act(p.b)):
        raise TieObserved(f"tie at s = {s.residue} for {p}")
    return eq1_sum(p, s) == 1


def eq2_sum(p: HGParams, s: UnitClass) -> Fraction:
    """``{sq} + {s(a-q)} + {s(b-q)} + {s(q-a-b)}``."""
    act = s.act
    return act(p.q) + act(p.a - p.q) + act(p.b - p.q) + act(p.q - p.a - p.b)


def eq2_holds_at(p: HGParams, s: UnitClass) -> bool:
    _require_valid(p)
    _check_modulus(p, s)
    return eq2_sum(p, s) == 2


@dataclass(frozen=True)
class BHInput:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(as_rational(v) for v in self.upper))
        object.__setattr__(self, "lower", tuple(as_rational(v) for v in self.lower))

    def violations(self) -> list[str]:
        out = []
        if len(self.lower) != len(self.upper) - 1:
            out.append("need exactly p-1 lower parameters for p upper parameters")
        if any(is_integer(a) for a in self.upper):
            out.append("{a_i} = 0 for some i")
        if any(is_integer(a - b) for a in self.upper for b in self.lower):
            out.append("{a_i} = {b_j} for some i, j")
        return out


def interlace(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> bool:
    """Strict alternation of two equal-size sets after sorting; duplicates never interlace."""
    if len(xs) != len(ys):
        return False
    xs, ys = sorted(xs), sorted(ys)
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys) or set(xs) & set(ys):
        return False
    merged = sorted([(v, 0) for v in xs] + [(v, 1) for v in ys])
    tags = [t for _, t in merged]
    return all(tags[i] != tags[i + 1] for i in range(len(tags) - 1))


def bh_algebraic(inp: BHInput) -> bool:
    """Beukers-Heckman: interlacing of ({s a_i}) and (0, {s b_j}) for every unit s."""
    bad = inp.violations()
    if bad:
        raise InvalidInput("; ".join(bad))
    n = denominator_lcm(inp.upper + inp.lower)
    for s in unit_classes(n):
        ups = [s.act(a) for a in inp.upper]
        lows = [Fraction(0)] + [s.act(b) for b in inp.lower]
        if not interlace(ups, lows):
            return False
    return True


def _record_bh(p: HGParams) -> bool:
    # 3F2(1,1,q; a,b) has integral upper parameters, outside the BH hypotheses
    inp = BHInput((Fraction(1), Fraction(1), p.q), (p.a, p.b))
    return False if inp.violations() else bh_algebraic(inp)


@dataclass
class ClassificationRecord:
    params: HGParams
    modulus: int
    eq1: dict[int, bool] = field(default_factory=dict)
    eq2: dict[int, bool] = field(default_factory=dict)
    bh: bool = False
    label: str = "None"
    violations: list[str] = field(default_factory=list)
    converges_at_1: bool = False

    def to_json(self) -> dict:
        p = self.params
        return {
            "q": format_rational(p.q),
            "a": format_rational(p.a),
            "b": format_rational(p.b),
            "N": self.modulus,
            "eq1": {str(s): v for s, v in self.eq1.items()},
            "eq2": {str(s): v for s, v in self.eq2.items()},
            "bh": self.bh,
            "label": self.label,
            "violations": list(self.violations),
            "converges_at_1": self.converges_at_1,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict) -> "ClassificationRecord":
        return cls(
            params=HGParams(parse_rational(obj["q"]), parse_rational(obj["a"]), parse_rational(obj["b"])),
            modulus=int(obj["N"]),
            eq1={int(k): bool(v) for k, v in obj["eq1"].items()},
            eq2={int(k): bool(v) for k, v in obj["eq2"].items()},
            bh=bool(obj["bh"]),
            label=obj["label"],
            violations=list(obj.get("violations", [])),
            converges_at_1=bool(obj.get("converges_at_1", False)),
        )

    def check_invariants(self) -> None:
        if self.label not in LABELS:
            raise AssertionError(f"unknown label {self.label}")
        if self.label == "FailsPreconditions":
            assert not self.eq1 and not self.eq2
            return
        all1, all2 = all(self.eq1.values()), all(self.eq2.values())
        assert (self.label == "LogFunctional") == all1
        assert (self.label == "LogAtOneOnly") == (all2 and not all1)
        assert all(self.eq2[s] for s, v in self.eq1.items() if v)


def classify(p: HGParams) -> ClassificationRecord:
    n = p.modulus
    converges = p.a + p.b > p.q + 2
    bad = check_preconditions(p)
    if bad:
        return ClassificationRecord(p, n, label="FailsPreconditions", violations=bad,
                                    converges_at_1=converges)
    # fractional parts as integers k with {s r} = k / N, so each class costs a few int ops
    qn, an, bn = int(p.q * n), int(p.a * n), int(p.b * n)
    eq1, eq2 = {}, {}
    for s in unit_classes(n):
        r = s.residue
        sq, sa, sb = r * qn % n, r * an % n, r * bn % n
        if sq == sa or sq == sb:
            raise TieObserved(f"tie at s = {r} for {p}")
        saq, sbq = r * (an - qn) % n, r * (bn - qn) % n
        eq1[r] = sa + sb + 2 * (-r * qn % n) - saq - sbq == n
        eq2[r] = sq + saq + sbq + r * (qn - an - bn) % n == 2 * n
    if all(eq1.values()):
        label = "LogFunctional"
    elif all(eq2.values()):
        label = "LogAtOneOnly"
    else:
        label = "None"
    return ClassificationRecord(p, n, eq1, eq2, _record_bh(p), label, [], converges)
