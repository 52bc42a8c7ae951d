from fractions import Fraction as F

import mpmath
import pytest
from flint import acb, arb

from hyperlog.ball import Ball, principal_log, rational_power, working_precision
from hyperlog.errors import BranchCut, DomainError


def test_exact_ball_contains_its_rational():
    b = Ball.exact(F(1, 3), 128)
    assert b.contains(F(1, 3))
    assert not b.contains(F(1, 3) + F(1, 10**30))


def test_arithmetic_is_enclosing():
    a, b = Ball.exact(F(1, 3), 64), Ball.exact(F(2, 7), 64)
    assert (a + b).contains(F(13, 21))
    assert (a * b).contains(F(2, 21))
    assert (a / b).contains(F(7, 6))
    assert (1 - a).contains(F(2, 3))


def test_precision_of_mixed_operands_is_the_minimum():
    assert (Ball.exact(1, 64) + Ball.exact(1, 256)).prec == 64


def test_heuristic_flag_propagates():
    h = Ball(arb(1), 64, heuristic=True)
    assert (h + Ball.exact(1, 64)).heuristic
    assert not (Ball.exact(1, 64) * 3).heuristic


def test_json_fields():
    d = Ball.exact(F(1, 2), 64).to_json()
    assert set(d) == {"mid", "rad", "bits", "heuristic"}
    assert d["bits"] == 64 and d["heuristic"] is False


def test_real_cube_root_policy():
    assert rational_power(Ball.exact(F(-1, 8), 64), F(1, 3), branch="real").contains(F(-1, 2))
    with pytest.raises(DomainError):
        rational_power(Ball.exact(F(-1, 8), 64), F(1, 2), branch="real")


def test_principal_powers():
    assert rational_power(Ball.exact(4, 64), F(1, 2)).contains(2)
    with working_precision(200):
        half_sqrt = arb(2).sqrt() / 2
    assert rational_power(Ball.exact(2, 128), F(-1, 2)).overlaps(Ball(half_sqrt, 128))


def test_principal_power_of_negative_base_is_complex():
    r = rational_power(Ball.exact(-8, 64), F(1, 3))
    # principal cube root of -8 is 2 exp(iπ/3) = 1 + i sqrt(3)
    assert r.real().contains(1)
    assert not r.is_real


def test_principal_log_on_negative_axis_uses_upper_side():
    lg = principal_log(Ball.exact(-1, 64))
    with working_precision(64):
        assert lg.value.imag.overlaps(arb.pi())


def test_branch_cut_straddle():
    with working_precision(64):
        z = acb(-1, arb(0, 1e-10))
    with pytest.raises(BranchCut):
        principal_log(Ball(z, 64))


def test_log_of_zero_ball():
    with pytest.raises(DomainError):
        principal_log(Ball(arb(0, 1e-5), 64))


def test_contains_mpf():
    with mpmath.workprec(300):
        third = mpmath.mpf(1) / 3
        assert Ball.exact(F(1, 3), 256).contains(third)
