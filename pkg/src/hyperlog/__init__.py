"""Exact and ball-arithmetic tools for logarithmic formulas of 3F2(1,1,q; a,b; x)."""

from .arith import UnitClass, frac, parse_rational, pochhammer, unit_classes
from .ball import Ball
from .criteria import HGParams, ClassificationRecord, classify
from .polynomial import Mat2, Poly, RationalFunction, det2

__version__ = "0.1.0"

__all__ = [
    "Ball",
    "ClassificationRecord",
    "HGParams",
    "Mat2",
    "Poly",
    "RationalFunction",
    "UnitClass",
    "classify",
    "det2",
    "frac",
    "parse_rational",
    "pochhammer",
    "unit_classes",
]
