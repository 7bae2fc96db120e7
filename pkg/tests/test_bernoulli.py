from fractions import Fraction as F
from math import factorial

import pytest
import sympy

from daehee_kit.bernoulli import (
    bernoulli_number,
    bernoulli_numbers_by_convolution,
    bernoulli_poly,
    bernoulli_poly_at,
)

t, x = sympy.symbols("t x")


def sympy_norlund(n, alpha):
    """Coefficients of B_n^(alpha)(x) from a symbolic series expansion."""
    gf = (t / (sympy.exp(t) - 1)) ** alpha * sympy.exp(x * t)
    coeff = sympy.series(gf, t, 0, n + 1).removeO().coeff(t, n) * factorial(n)
    poly = sympy.Poly(sympy.expand(coeff), x)
    return [F(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]


def test_number_examples():
    assert all(bernoulli_number(0, a) == 1 for a in range(8))
    assert bernoulli_number(2, 1) == F(1, 6)
    assert bernoulli_number(2, 2) == F(5, 6)


def test_poly_examples():
    assert bernoulli_poly(0, 5).coeffs == (1,)
    assert bernoulli_poly(1, 1).coeffs == (F(-1, 2), 1)
    assert bernoulli_poly(1, 3).coeffs == (F(-3, 2), 1)


def test_poly_at_examples():
    assert bernoulli_poly_at(0, 4, F(7, 3)) == 1
    assert bernoulli_poly_at(1, 3, 1) == F(-1, 2)
    assert bernoulli_poly_at(2, 4, 1) == F(2, 3)


@pytest.mark.parametrize("n, alpha", [(n, a) for n in range(6) for a in range(4)])
def test_matches_symbolic_expansion(n, alpha):
    assert list(bernoulli_poly(n, alpha).coeffs) == sympy_norlund(n, alpha)


def test_order_one_matches_sympy():
    for n in range(2, 30):
        b = sympy.bernoulli(n)
        assert bernoulli_number(n, 1) == F(int(b.p), int(b.q))


@pytest.mark.parametrize("alpha", range(11))
def test_convolution_route_agrees(alpha):
    by_conv = bernoulli_numbers_by_convolution(16, alpha)
    assert by_conv == [bernoulli_number(n, alpha) for n in range(17)]


@pytest.mark.parametrize("n", range(13))
def test_difference_identity_order_one(n):
    p = bernoulli_poly(n, 1)
    diff = p.shift(1) - p
    expected = [0] * n
    if n:
        expected[n - 1] = n
    assert list(diff.coeffs) == expected[: diff.degree + 1] and diff.degree == n - 1


@pytest.mark.parametrize("n, alpha", [(n, a) for n in range(15) for a in (0, 1, 4, 9)])
def test_poly_at_zero_is_number(n, alpha):
    assert bernoulli_poly(n, alpha)(0) == bernoulli_number(n, alpha)


def test_truncation_order_does_not_change_values():
    for n in range(10):
        assert bernoulli_number(n, 3, order=n) == bernoulli_number(n, 3, order=40)
    with pytest.raises(ValueError):
        bernoulli_number(5, 1, order=4)
