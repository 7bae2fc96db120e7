from fractions import Fraction as F
from math import comb, factorial, gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from daehee_kit.algebra import (
    RationalPolynomial,
    TruncatedSeries,
    binomial_series,
    egf_coefficient,
    exp_minus_one,
    poly_eval,
    series_add,
    series_compose,
    series_exp,
    series_log1p,
    series_mul,
    series_pow,
    series_reciprocal,
    series_shift_divide,
)
from daehee_kit.combinat import falling_factorial_poly


def S(*cs, order=None):
    return TruncatedSeries(cs, order)


def log1p_over_t(order):
    return series_shift_divide(series_log1p(order + 1), 1)


# --- series_add ----------------------------------------------------------

def test_add_examples():
    assert series_add(S(1, 1), S(1, -1)) == S(2, 0)
    a = S(1, F(-1, 2), F(1, 3))
    assert series_add(a, S(0, 0, 0)) == a
    assert series_add(a, S(0, F(1, 2), 0)) == S(1, 0, F(1, 3))


def test_add_truncates_to_min_order():
    assert series_add(S(1, 2, 3), S(1, 1)).order == 1


# --- series_mul / series_pow ---------------------------------------------

def test_mul_examples():
    assert series_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)
    a = S(1, F(-1, 2), F(1, 3))
    assert series_mul(a, S(1, 0, 0)) == a
    assert series_mul(a, a) == S(1, -1, F(11, 12))


def test_pow_examples():
    a = S(1, F(-1, 2), F(1, 3))
    assert series_pow(a, 0) == S(1, 0, 0)
    assert series_pow(a, 1) == a
    assert series_pow(log1p_over_t(4), 2)[1] == -1


def test_pow_negative_rejected():
    with pytest.raises(ValueError):
        series_pow(S(1, 1), -1)


# --- log1p / exp / compose / shift --------------------------------------

def test_log1p_examples():
    assert series_log1p(0) == S(0)
    assert series_log1p(3) == S(0, 1, F(-1, 2), F(1, 3))
    assert series_log1p(5)[1] == 1


def test_exp_examples():
    assert series_exp(S(0, 0, 0)) == S(1, 0, 0)
    assert series_exp(S(0, 1, 0, 0)) == S(1, 1, F(1, 2), F(1, 6))
    assert series_exp(series_log1p(4)) == S(1, 1, 0, 0, 0)


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series_exp(S(1, 1))


def test_compose_examples():
    a = S(3, F(1, 7), -2, 5)
    assert series_compose(a, TruncatedSeries.variable(3)) == a
    assert series_compose(S(1, 1, 0, 0, 0, 0), exp_minus_one(5)) == series_exp(S(0, 1, 0, 0, 0, 0))
    # log(1+t)/t at t = e^t - 1 is t/(e^t - 1); t^2 coefficient is B_2/2! = 1/12
    composed = series_compose(log1p_over_t(6), exp_minus_one(6))
    assert composed[2] == F(1, 12)


def test_compose_rejects_constant_inner():
    with pytest.raises(ValueError):
        series_compose(S(1, 1), S(1, 1))


def test_shift_divide_examples():
    assert series_shift_divide(S(0, 1), 1) == S(1)
    assert log1p_over_t(2) == S(1, F(-1, 2), F(1, 3))
    assert series_shift_divide(S(0, 0, 1, -1), 2) == S(1, -1)


def test_shift_divide_rejects_nonzero_head():
    with pytest.raises(ValueError):
        series_shift_divide(S(0, 1, 2), 2)


# --- egf / reciprocal ---------------------------------------------------

def test_egf_examples():
    assert egf_coefficient(log1p_over_t(3), 2) == F(2, 3)
    assert egf_coefficient(S(F(5, 7), 1), 0) == F(5, 7)
    assert egf_coefficient(series_pow(log1p_over_t(3), 2), 1) == -1


def test_egf_beyond_order_rejected():
    with pytest.raises(ValueError):
        egf_coefficient(S(1, 2), 2)


def test_reciprocal_roundtrip():
    a = S(2, 3, F(1, 2), -1, 4)
    assert series_mul(a, series_reciprocal(a)) == S(1, 0, 0, 0, 0)


def test_binomial_series_coefficients():
    x = F(-3, 2)
    s = binomial_series(x, 6)
    for i in range(7):
        assert s[i] == falling_factorial_poly(i)(x) / factorial(i)


# --- polynomials ---------------------------------------------------------

def test_poly_eval_examples():
    assert poly_eval(RationalPolynomial([-1, 0, 1]), 1) == 0
    assert poly_eval(RationalPolynomial([F(-1, 2), 1]), F(3, 2)) == 1
    assert poly_eval(falling_factorial_poly(3), 5) == 60


def test_poly_canonical_form():
    p = RationalPolynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1
    assert RationalPolynomial([0, 0]).degree == -1
    assert (p - p).is_zero()


def test_compose_affine_and_reflect():
    p = RationalPolynomial([1, 2, 3])  # 1 + 2x + 3x^2
    assert p.compose_affine(1, 1) == RationalPolynomial([6, 8, 3])
    assert p.reflect() == p.compose_affine(-1, 0)
    for x in (F(0), F(2), F(-1, 3)):
        assert p.compose_affine(F(2, 5), -4)(x) == p(F(2, 5) * x - 4)


# --- properties ------------------------------------------------------------

small = st.integers(-6, 6)


def series_st(order):
    return st.lists(small, min_size=order + 1, max_size=order + 1).map(lambda cs: TruncatedSeries(cs))


@given(series_st(7), series_st(7), series_st(7))
def test_ring_laws(a, b, c):
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
    assert series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c))


@given(series_st(12), series_st(12))
def test_binomial_convolution_law(a, b):
    ab = series_mul(a, b)
    for n in range(13):
        expected = sum(comb(n, j) * egf_coefficient(a, j) * egf_coefficient(b, n - j) for j in range(n + 1))
        assert egf_coefficient(ab, n) == expected


@pytest.mark.parametrize("order", [1, 5, 12])
def test_exp_log_inverse(order):
    t = TruncatedSeries.variable(order)
    assert series_compose(series_log1p(order), exp_minus_one(order)) == t
    assert series_compose(exp_minus_one(order), series_log1p(order)) == t


@given(series_st(6), series_st(6))
def test_results_stay_in_lowest_terms(a, b):
    a = a * F(1, 3)
    for s in (series_mul(a, b), series_add(a, b), series_pow(a, 3)):
        for c in s.coeffs:
            assert isinstance(c, F)
            assert c.denominator > 0
            assert gcd(c.numerator, c.denominator) == 1
