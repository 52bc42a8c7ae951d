import random
from fractions import Fraction as F
from functools import lru_cache

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from hyperlog.errors import InvalidInput, PoleAtShift
from hyperlog.polynomial import RationalFunction
from hyperlog.regulator import (
    RecurrenceParams,
    ab_funcs,
    block_identity_det,
    cd_sequence,
    closed_form_det0,
    det_scan,
    e_det,
    e_pair,
    e_pair_ball,
)

from strategies import non_integral

LAM = sympy.Symbol("lam")
TATE = RecurrenceParams(F(1, 2), F(1, 6), F(5, 6))
NON_TATE = RecurrenceParams(F(1, 2), F(1, 6), F(1, 4))
lam = RationalFunction.var()


def to_sympy(f: RationalFunction):
    def poly(p):
        return sum(sympy.Rational(c.numerator, c.denominator) * LAM**i for i, c in enumerate(p.coeffs))
    return poly(f.num) / poly(f.den)


def sympy_oracle(p: RecurrenceParams):
    """C, D, E straight from the recurrence definitions, symbolic in λ."""
    a = sympy.Rational(p.a.numerator, p.a.denominator)
    b = sympy.Rational(p.b.numerator, p.b.denominator)
    mu = sympy.Rational(p.mu.numerator, p.mu.denominator)

    def A(s):
        return s * (a + b + 2 * s - 3 - s / (1 - LAM)) / ((a + s - 1) * (b + s - 1))

    def B(s):
        return s * (1 - s) * (1 - 1 / (1 - LAM)) / ((a + s - 1) * (b + s - 1))

    @lru_cache(maxsize=None)
    def cd(i, j):
        # index i at argument mu + j
        if i == -1:
            return sympy.Integer(0), sympy.Integer(1)
        c, d = cd(i - 1, j + 1)
        s = mu + j
        return sympy.cancel(A(s) * c + d), sympy.cancel(B(s) * c)

    def e(r):
        (c0, d0), (c1, d1) = cd(r, 0), cd(r + 1, 0)
        return LAM * c0 + (1 - LAM) * c1, LAM * d0 + (1 - LAM) * d1

    return A, B, cd, e


def same(f: RationalFunction, expr) -> bool:
    return sympy.cancel(to_sympy(f) - expr) == 0


def test_b_vanishes_at_one():
    assert ab_funcs(TATE, 1)[1].is_zero()


def test_a_at_lambda_zero():
    s = F(1, 2)
    a_fn, _ = ab_funcs(TATE, s)
    a, b = TATE.a, TATE.b
    assert a_fn(0) == s * (a + b + 2 * s - 3 - s) / ((a + s - 1) * (b + s - 1))


def test_cd_seed_and_first_steps():
    assert (cd_sequence(TATE, -1).C, cd_sequence(TATE, -1).D) == (0, 1)
    assert (cd_sequence(TATE, 0).C, cd_sequence(TATE, 0).D) == (1, 0)
    a_fn, b_fn = ab_funcs(TATE, TATE.mu)
    assert (cd_sequence(TATE, 1).C, cd_sequence(TATE, 1).D) == (a_fn, b_fn)


def test_e_pair_first_rows():
    e = e_pair(TATE, -1)
    assert (e.E1, e.E2) == (1 - lam, lam)
    a_fn, b_fn = ab_funcs(TATE, TATE.mu)
    e = e_pair(TATE, 0)
    assert (e.E1, e.E2) == (lam + (1 - lam) * a_fn, (1 - lam) * b_fn)


def test_det_r0_examples():
    d = e_det(TATE, 0)
    assert d == closed_form_det0(TATE, TATE.mu)
    assert d(0) == 0
    assert not e_det(TATE, 1).is_zero()


@st.composite
def recurrence_params(draw):
    mu, b1, b2 = draw(non_integral(12)), draw(non_integral(12)), draw(non_integral(12))
    assume(all(v.denominator > 1 for v in (mu - b1, mu - b2, mu - b1 - b2)))
    return RecurrenceParams(mu, b1, b2)


@given(recurrence_params())
def test_det_r0_closed_form(p):
    assert e_det(p, 0) == closed_form_det0(p, p.mu)


@settings(max_examples=15, deadline=None)
@given(recurrence_params())
def test_against_sympy_oracle(p):
    _, _, cd, e = sympy_oracle(p)
    for r in range(4):
        c, d = cd(r, 0)
        got = cd_sequence(p, r)
        assert same(got.C, c) and same(got.D, d)
        e1, e2 = e(r)
        ep = e_pair(p, r)
        assert same(ep.E1, e1) and same(ep.E2, e2)
        if r:
            p1, p2 = e(r - 1)
            assert same(e_det(p, r), e1 * p2 - e2 * p1)


@pytest.mark.parametrize("p", [TATE, NON_TATE])
def test_block_identity(p):
    for r in range(11):
        assert e_det(p, r) == block_identity_det(p, r)


@pytest.mark.parametrize("p", [TATE, NON_TATE])
def test_matrix_recursion(p):
    # row E^(r+1) at mu is row E^(r) at mu+1 times [[A, B], [1, 0]]
    nxt = RecurrenceParams(p.mu + 1, p.beta1, p.beta2)
    a_fn, b_fn = ab_funcs(p, p.mu)
    for r in range(-1, 10):
        hi, lo = e_pair(p, r + 1), e_pair(nxt, r)
        assert hi.E1 == a_fn * lo.E1 + lo.E2
        assert hi.E2 == b_fn * lo.E1


@pytest.mark.parametrize("p", [TATE, NON_TATE])
def test_det_scan_examples(p):
    assert det_scan(p, 50) == []


def test_ball_evaluation_matches_exact():
    for r in range(-1, 8):
        exact = e_pair(TATE, r)
        b1, b2 = e_pair_ball(TATE, r, -1, 128)
        assert b1.contains(exact.E1(-1)) and b2.contains(exact.E2(-1))


def test_random_ball_cross_check():
    rng = random.Random(7)
    for _ in range(5):
        p = RecurrenceParams(F(rng.randint(1, 9), 10) + F(1, 97), F(1, 6), F(5, 6))
        lam_v = F(-rng.randint(1, 20), rng.randint(1, 7))
        exact = e_pair(p, 5)
        b1, b2 = e_pair_ball(p, 5, lam_v)
        assert b1.contains(exact.E1(lam_v)) and b2.contains(exact.E2(lam_v))


def test_invalid_parameters():
    with pytest.raises(InvalidInput):
        RecurrenceParams(1, F(1, 6), F(5, 6))
    with pytest.raises(InvalidInput):
        RecurrenceParams(F(1, 2), F(1, 2), F(5, 6))
    with pytest.raises(InvalidInput):
        RecurrenceParams(F(1, 2), F(1, 6), F(1, 3))


def test_pole_at_shift():
    # a + s - 1 = 0 at s = beta1 - 1
    with pytest.raises(PoleAtShift):
        ab_funcs(TATE, TATE.beta1 - 1)
