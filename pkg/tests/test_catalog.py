import cmath
import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, strategies as st

from bohr.catalog import (
    ExtremalMap,
    Family,
    MapKind,
    binomial_coeffs,
    distance_bounds,
    distance_constant,
    eval_map,
    exponent_coeff,
    exponent_series,
    f0_exponent_series,
    koebe_coeffs,
    map_coeffs,
    phi_a_coeffs,
    wedge_coeffs,
)
from bohr.errors import DomainError
from bohr.series import CoeffSeries, exp_series, majorant_sum, mul_series

z = sp.symbols("z")


def test_exponent_coefficients():
    assert exponent_coeff(MapKind.H0_FACTOR, 1) == 3.0
    assert exponent_coeff(MapKind.G0_FACTOR, 1) == 1.0
    assert exponent_coeff(MapKind.H0_FACTOR, 2) == 2.5
    assert exponent_coeff(MapKind.G0_FACTOR, 2) == 1.5
    for n in range(1, 65):
        assert exponent_coeff("H0factor", n) == 2 + 1 / n
        assert exponent_coeff("G0factor", n) == 2 - 1 / n


def test_exponent_rejects_bad_index_and_kind():
    with pytest.raises(DomainError):
        exponent_coeff(MapKind.H0_FACTOR, 0)
    with pytest.raises(DomainError):
        exponent_coeff(MapKind.KOEBE, 1)


def test_values_at_origin():
    assert eval_map(ExtremalMap(MapKind.H0_FACTOR), 0) == 1
    assert eval_map(ExtremalMap(MapKind.G0_FACTOR), 0) == 1
    assert eval_map(ExtremalMap(MapKind.WEDGE, alpha=1.5, t=4), 0) == 4
    assert eval_map(ExtremalMap(MapKind.F0), 0) == 0


def test_closed_form_values():
    assert eval_map(ExtremalMap(MapKind.KOEBE), 0.5) == pytest.approx(2.0, abs=1e-15)
    assert eval_map(ExtremalMap(MapKind.WEDGE, alpha=1, t=1), 1 / 3) == pytest.approx(2.0, abs=1e-15)
    assert eval_map(ExtremalMap(MapKind.PHI_A, a=0.5), 0.5) == 0
    f0 = eval_map(ExtremalMap(MapKind.F0), 0.5)
    assert f0 == pytest.approx(0.5 * math.e ** 4, rel=1e-14)
    assert f0.real == pytest.approx(27.299, abs=1e-3)


def test_f0_is_not_analytic():
    # f0 = z h0(z) conj(g0(z)); check the factorisation pointwise
    w = 0.3 + 0.2j
    h = eval_map(ExtremalMap(MapKind.H0_FACTOR), w)
    g = eval_map(ExtremalMap(MapKind.G0_FACTOR), w)
    assert eval_map(ExtremalMap(MapKind.F0), w) == pytest.approx(w * h * np.conj(g), rel=1e-13)
    with pytest.raises(DomainError):
        map_coeffs(ExtremalMap(MapKind.F0))


def test_boundary_rejected():
    for k in MapKind:
        with pytest.raises(DomainError):
            eval_map(ExtremalMap(k, a=0.3), 1.0)
    with pytest.raises(DomainError):
        eval_map(ExtremalMap(MapKind.KOEBE), np.array([0.1, 0.99j, 1.2]))


def test_parameter_validation():
    with pytest.raises(DomainError):
        ExtremalMap(MapKind.PHI_A, a=1.0)
    with pytest.raises(DomainError):
        ExtremalMap(MapKind.WEDGE, alpha=0.5)
    with pytest.raises(DomainError):
        ExtremalMap(MapKind.WEDGE, alpha=2.5)
    with pytest.raises(DomainError):
        ExtremalMap(MapKind.WEDGE, alpha=1.5, t=0)


def test_rotation_applies_to_both_forms():
    m = ExtremalMap(MapKind.KOEBE, rotation=math.pi)
    assert m(0.5) == pytest.approx(-0.5 / 2.25, abs=1e-15)
    assert complex(m.coeffs(64)(0.5)) == pytest.approx(m(0.5), abs=1e-9)


def test_phi_a_coefficients():
    c = phi_a_coeffs(0.5, 4).real
    assert np.allclose(c, [0.5, -0.75, -0.375, -0.1875, -0.09375], rtol=0, atol=1e-16)


@pytest.mark.parametrize("a", [0.3, 0.6, 0.9])
def test_phi_a_majorant_reaches_one_at_classical_radius(a):
    r = 1 / (1 + 2 * a)
    closed = a + (1 - a * a) * r / (1 - a * r)
    assert closed == pytest.approx(1.0, abs=1e-15)
    # truncation error of the majorant: (1-a^2) a^N r^{N+1}/(1-a r)
    N = 400
    err = (1 - a * a) * a ** N * r ** (N + 1) / (1 - a * r)
    assert abs(majorant_sum(phi_a_coeffs(a, N), r) - closed) <= err + 1e-14


def test_koebe_coefficients():
    assert np.array_equal(koebe_coeffs(4).real, [0, 1, 2, 3, 4])
    assert np.array_equal(koebe_coeffs(64).real, np.arange(65))


def test_binomial_against_sympy():
    for alpha in (1.5, -2.0, 0.3):
        expected = sp.series((1 + z) ** sp.nsimplify(alpha), z, 0, 9).removeO()
        got = binomial_coeffs(alpha, 8).real
        assert np.allclose(got, [float(expected.coeff(z, n)) for n in range(9)], rtol=1e-14)


def test_wedge_coefficients():
    assert np.allclose(wedge_coeffs(1.0, 4).real, [1, 2, 2, 2, 2], rtol=0, atol=1e-15)
    A = wedge_coeffs(2.0, 4).real
    assert np.allclose(A, [1, 4, 8, 12, 16], rtol=0, atol=1e-14)
    for alpha in (1.0, 1.3, 2.0):
        assert wedge_coeffs(alpha, 3).real[1] == pytest.approx(2 * alpha, abs=1e-15)


def test_wedge_against_sympy():
    alpha = sp.Rational(3, 2)
    expected = sp.series(((1 + z) / (1 - z)) ** alpha, z, 0, 13).removeO()
    got = wedge_coeffs(1.5, 12).real
    assert np.allclose(got, [float(expected.coeff(z, n)) for n in range(13)], rtol=1e-13)


@pytest.mark.parametrize("alpha", [1 + k / 10 for k in range(11)])
def test_wedge_coefficients_positive(alpha):
    A = wedge_coeffs(alpha, 64).real
    assert np.all(A[1:] > 0)


def test_h0_g0_product_identity():
    # g0 = (1 - z)^2 h0 coefficientwise
    order = 40
    h = exp_series(exponent_series(MapKind.H0_FACTOR, order))
    g = exp_series(exponent_series(MapKind.G0_FACTOR, order))
    one_minus_z = CoeffSeries(np.r_[1.0, -1.0, np.zeros(order - 1)])
    lhs = mul_series(mul_series(one_minus_z, one_minus_z), h).real
    assert np.allclose(lhs, g.real, rtol=0, atol=1e-12 * np.max(np.abs(g.real)))


def laguerre_h0(order):
    # exp(-x t/(1-t))/(1-t) = sum L_n(x) t^n; h0 is the case x = -2
    return np.array([float(sp.laguerre(n, -2)) for n in range(order + 1)])


def test_h0_matches_laguerre_generating_function():
    order = 30
    got = map_coeffs(ExtremalMap(MapKind.H0), order).real
    assert np.allclose(got, np.r_[0.0, laguerre_h0(order - 1)], rtol=1e-13)
    assert np.allclose(exp_series(exponent_series(MapKind.H0_FACTOR, 64)).real,
                       laguerre_h0(64), rtol=1e-12)


analytic = [ExtremalMap(MapKind.PHI_A, a=0.4), ExtremalMap(MapKind.KOEBE),
            ExtremalMap(MapKind.H0_FACTOR), ExtremalMap(MapKind.G0_FACTOR),
            ExtremalMap(MapKind.H0), ExtremalMap(MapKind.G0),
            ExtremalMap(MapKind.WEDGE, alpha=1.7, t=2.0),
            ExtremalMap(MapKind.KOEBE, rotation=0.7)]


@given(st.sampled_from(analytic), st.floats(0, 0.3), st.floats(0, 2 * math.pi))
def test_series_agrees_with_closed_form(m, rho, theta):
    w = rho * cmath.exp(1j * theta)
    series = complex(m.coeffs(64)(w))
    closed = m(w)
    assert abs(series - closed) <= 1e-10 * max(1.0, abs(closed))


def test_vectorized_evaluation():
    pts = np.array([0.1, 0.2j, -0.5])
    out = eval_map(ExtremalMap(MapKind.KOEBE), pts)
    assert out.shape == (3,)
    assert out[2] == pytest.approx(-0.5 / 2.25)


def test_distance_constants():
    assert distance_constant(Family.H) == pytest.approx(1 / (2 * math.e), abs=1e-16)
    assert distance_constant("G") == pytest.approx(2 / math.e, abs=1e-16)
    assert distance_constant(Family.F) == pytest.approx(math.exp(-2), abs=1e-16)
    b = distance_bounds("F")
    assert (b.family, b.lower, b.upper) == (Family.F, math.exp(-2), 1.0)


def test_distance_constant_limits():
    # along the negative axis the extremal images approach the boundary point
    r = 1 - 1e-9
    assert abs(eval_map(ExtremalMap(MapKind.H0), -r)) == pytest.approx(1 / (2 * math.e), rel=1e-6)
    assert abs(eval_map(ExtremalMap(MapKind.G0), -r)) == pytest.approx(2 / math.e, rel=1e-6)
    assert abs(eval_map(ExtremalMap(MapKind.F0), -r)) == pytest.approx(math.exp(-2), rel=1e-6)


@given(st.floats(-math.pi, math.pi))
def test_f0_functional_coefficients(t):
    c = np.abs(f0_exponent_series(64, t).coeffs[1:])
    assert np.all(c <= 4 + 1e-12)
    assert np.allclose(f0_exponent_series(64).coeffs[1:], 4.0, rtol=0, atol=1e-15)
