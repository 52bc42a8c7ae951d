import math
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from hyperlog.criteria import HGParams, check_preconditions, classify
from hyperlog.errors import InvalidInput, NotGaussType
from hyperlog.hodge import (
    HodgeInput,
    RiemannScheme,
    canonical_frame,
    connection_matrix,
    d_chi,
    delta_decomposition,
    gauge_transform,
    gauss_type_data,
    hodge_triple,
    residue_eigenvalues_in_frame,
    spectrum,
    tate_check,
)
from hyperlog.polynomial import Mat2, RationalFunction

from strategies import non_integral, unit_open


def test_gauss_type_data_examples():
    g = gauss_type_data(6, 1, 2, 1, 1)
    assert (g.a_n, g.b_n, g.c_n) == (0, 0, 0)
    assert (g.alpha_n, g.beta_n) == (F(5, 6), F(2, 3))
    assert (g.d1, g.d2) == (1, 2)
    g = gauss_type_data(5, 1, 2, 1, 1)
    assert (g.alpha_n, g.beta_n, g.c_n) == (F(4, 5), F(3, 5), 0)


def test_not_gauss_type():
    with pytest.raises(NotGaussType):
        gauss_type_data(6, 2, 3, 1, 3)


@pytest.mark.parametrize("args", [(6, 0, 1, 1, 1), (6, 2, 4, 1, 1), (6, 1, 2, 2, 1), (6, 1, 2, 1, 4)])
def test_gauss_type_data_rejects(args):
    with pytest.raises(InvalidInput):
        gauss_type_data(*args)


@st.composite
def gauss_inputs(draw):
    n_mod = draw(st.integers(2, 30))
    a = draw(st.integers(1, n_mod - 1))
    b = draw(st.integers(1, n_mod - 1))
    n = draw(st.integers(1, 5 * n_mod))
    assume(math.gcd(n_mod, a, b) == 1 and math.gcd(n, n_mod) == 1)
    return n_mod, a, b, n


@given(gauss_inputs())
def test_gauss_type_invariants(inp):
    n_mod, a, b, n = inp
    g = gauss_type_data(n_mod, a, b, n, 1)
    assert g.c_n == n - g.b_n - 1
    assert g.c_n == (n_mod * n - b * n) // n_mod
    assert 0 < g.alpha_n < 1 and 0 < g.beta_n < 1
    assert g.alpha_n == 1 - F(a * n, n_mod) + (a * n) // n_mod
    assert g.riemann_scheme().exponent_sum() == 1


def test_riemann_scheme_layout():
    rs = RiemannScheme.from_exponents(F(5, 6), F(2, 3))
    assert rs.at_0 == (0, F(-1, 2)) and rs.at_1 == (0, 0) and rs.at_inf == (F(5, 6), F(2, 3))


@pytest.mark.parametrize("d, triple", [(2, (1, 1, 0)), (1, (0, 2, 0)), (0, (0, 1, 1))])
def test_hodge_table(d, triple):
    assert hodge_triple(d).as_tuple() == triple


@pytest.mark.parametrize("d", [-1, 3])
def test_hodge_table_out_of_range(d):
    with pytest.raises(InvalidInput):
        hodge_triple(d)


def test_d_chi_examples():
    assert d_chi(HodgeInput(F(1, 2), F(1, 6), F(5, 6))) == 1
    h = HodgeInput(F(1, 2), F(1, 6), F(1, 4))
    assert d_chi(h) == sum(delta_decomposition(h)) == 0
    h = HodgeInput(F(1, 3), F(1, 6), F(1, 6))
    assert d_chi(h) == 0 and delta_decomposition(h) == (0, 0)


def test_hodge_input_rejects_integral_data():
    with pytest.raises(InvalidInput):
        HodgeInput(1, F(1, 2), F(1, 3))
    with pytest.raises(InvalidInput):
        HodgeInput(F(1, 2), F(3, 2), F(1, 3))


@st.composite
def hodge_inputs(draw):
    mu, b1, b2 = draw(non_integral(20)), draw(non_integral(20)), draw(non_integral(20))
    assume((b1 - mu).denominator > 1 and (b2 - mu).denominator > 1)
    return HodgeInput(mu, b1, b2)


@given(hodge_inputs())
def test_d_chi_range_and_decomposition(h):
    deltas = delta_decomposition(h)
    assert all(x in (0, 1) for x in deltas)
    assert d_chi(h) == sum(deltas)
    assert sum(hodge_triple(d_chi(h)).as_tuple()) == 2


def test_tate_examples():
    assert tate_check(HodgeInput(F(1, 2), F(1, 6), F(5, 6)))
    assert not tate_check(HodgeInput(F(1, 2), F(1, 6), F(1, 4)))


@given(hodge_inputs())
def test_tate_matches_classify(h):
    p = HGParams(h.mu, h.beta1, h.beta2)
    assume(not check_preconditions(p))
    assert tate_check(h) == (classify(p).label == "LogFunctional")


def test_connection_matrix_entries():
    t = RationalFunction.var()
    m = connection_matrix(F(1, 6), F(2, 3))
    assert m == Mat2.of([[0, F(2, 3) / t], [F(1, 6) / (1 - t), -F(5, 6) / t]])


def test_raw_residues():
    m = connection_matrix(F(1, 6), F(2, 3))
    at0 = spectrum(m.residue_at(0))
    assert at0.eigenvalues == (F(-5, 6), 0)
    at1 = m.residue_at(1)
    assert spectrum(at1).eigenvalues == (0, 0)
    assert any(x != 0 for row in at1 for x in row)  # rank 1, nilpotent


def test_frame_cases():
    t = RationalFunction.var()
    assert canonical_frame(F(1, 6), F(2, 3), 0) == Mat2.of([[1, t * F(2, 3)], [0, t * F(5, 6)]])
    assert canonical_frame(F(5, 6), F(2, 3), 0) == Mat2.of([[t, F(1, 2)], [0, t * F(5, 6)]])
    assert canonical_frame(F(1, 6), F(2, 3), 1) == Mat2.identity()


@pytest.mark.parametrize("b1, b2, point, eig", [
    (F(1, 6), F(2, 3), 0, (0, F(1, 6))),
    (F(5, 6), F(2, 3), 0, (0, F(1, 2))),
    (F(1, 6), F(2, 3), 1, (0, 0)),
])
def test_frame_residue_examples(b1, b2, point, eig):
    assert residue_eigenvalues_in_frame(b1, b2, point).eigenvalues == eig


@given(unit_open(30), unit_open(30))
def test_frame_residues_in_unit_interval(b1, b2):
    for point in (0, 1):
        assert residue_eigenvalues_in_frame(b1, b2, point).in_half_open_unit()


@given(unit_open(30), unit_open(30), st.integers(1, 5))
def test_frame_second_vector_scale_is_irrelevant(b1, b2, c):
    # <ω, t(β2 ω + c η)> spans the same lattice for every nonzero constant c
    assume(b1 + b2 <= 1)
    t = RationalFunction.var()
    alt = Mat2.of([[1, t * b2], [0, t * c * b1]])
    m = connection_matrix(b1, b2)
    assert spectrum(gauge_transform(m, alt).residue_at(0)) == residue_eigenvalues_in_frame(b1, b2, 0)


def test_spectrum_without_rational_eigenvalues():
    sp = spectrum([[F(0), F(1)], [F(-1, 8), F(1, 2)]])
    assert sp.eigenvalues is None
    assert not sp.in_half_open_unit()  # complex pair
    sp = spectrum([[F(0), F(1)], [F(-1, 10), F(1)]])
    assert sp.eigenvalues is None and sp.in_half_open_unit()
