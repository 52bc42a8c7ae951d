from fractions import Fraction as F

import mpmath
import pytest

from hyperlog.errors import DomainError, InvalidInput, NoConvergence
from hyperlog.quadrature import de_quad


def test_constant_integrand():
    r = de_quad(1, 1, prec=64)
    assert r.heuristic
    assert abs(float(r.mid_str(20)) - 1) < 1e-17


def test_inverse_square_root_singularity():
    assert abs(float(de_quad(F(1, 2), 1, prec=64).mid_str(20)) - 2) < 1e-16


@pytest.mark.parametrize("alpha, beta", [(F(4, 5), F(3, 5)), (F(1, 6), F(5, 6)), (F(1, 10), F(9, 10))])
def test_beta_function(alpha, beta):
    r = de_quad(alpha, beta, prec=64)
    with mpmath.workprec(200):
        exact = mpmath.beta(mpmath.mpf(alpha.numerator) / alpha.denominator,
                            mpmath.mpf(beta.numerator) / beta.denominator)
        assert abs(mpmath.mpf(r.mid_str(30)) - exact) < mpmath.mpf(2) ** -55 * exact


def test_kernel_with_parameter():
    # ∫ x^(α-1) (1-x)^(β-1) (1-tx)^(-γ) = B(α, β) 2F1(γ, α; α+β; t)
    a, b, g, t = F(1, 3), F(1, 2), F(1, 2), F(1, 3)
    r = de_quad(a, b, g, t, prec=64)
    with mpmath.workprec(200):
        am, bm, gm, tm = (mpmath.mpf(v.numerator) / v.denominator for v in (a, b, g, t))
        exact = mpmath.beta(am, bm) * mpmath.hyp2f1(gm, am, am + bm, tm)
        assert abs(mpmath.mpf(r.mid_str(30)) - exact) < mpmath.mpf(10) ** -16


def test_errors():
    with pytest.raises(InvalidInput):
        de_quad(0, 1)
    with pytest.raises(DomainError):
        de_quad(1, 1, 1, 1)
    with pytest.raises(NoConvergence):
        de_quad(F(1, 2), F(1, 2), prec=400, max_level=1)
