from fractions import Fraction as F
from itertools import product
from math import factorial

import pytest

from daehee_kit.bernoulli import bernoulli_poly, bernoulli_poly_at
from daehee_kit.combinat import StirlingCache, multinomial
from daehee_kit.daehee import (
    DaeheeKind,
    Kind,
    daehee1_number_closed,
    daehee1_number_gf,
    daehee1_number_multinomial,
    daehee1_number_stirling_bernoulli,
    daehee1_poly,
    daehee1_poly_gf,
    daehee2_number,
    daehee2_number_gf,
    daehee2_poly,
    daehee2_poly_gf,
    daehee_order1,
)

GRID = [(n, k) for n in range(21) for k in range(1, 7)]


def compositions_oracle(n, k):
    """Literal sum over compositions l_1 + ... + l_k = n."""
    total = F(0)
    for parts in product(range(n + 1), repeat=k):
        if sum(parts) != n:
            continue
        term = F(multinomial(n, parts))
        for l in parts:
            term *= daehee_order1(l)
        total += term
    return total


# --- worked examples -----------------------------------------------------

def test_closed_examples():
    assert all(daehee1_number_closed(0, k) == 1 for k in range(1, 7))
    assert daehee1_number_closed(2, 1) == F(2, 3)
    assert daehee1_number_closed(1, 2) == -1


def test_gf_examples():
    assert all(daehee1_number_gf(0, k) == 1 for k in range(1, 7))
    assert daehee1_number_gf(2, 1) == F(2, 3)
    assert daehee1_number_gf(2, 2) == F(11, 6)


def test_stirling_bernoulli_examples():
    assert daehee1_number_stirling_bernoulli(0, 3) == 1
    assert daehee1_number_stirling_bernoulli(1, 1) == F(-1, 2)
    assert daehee1_number_stirling_bernoulli(2, 2) == F(11, 6)


def test_multinomial_examples():
    assert all(daehee1_number_multinomial(n, 1) == daehee_order1(n) for n in range(10))
    assert daehee1_number_multinomial(1, 2) == -1
    assert daehee1_number_multinomial(2, 2) == F(11, 6)


def test_poly_examples():
    assert daehee1_poly(0, 4).coeffs == (1,)
    assert daehee1_poly(1, 1).coeffs == (F(-1, 2), 1)
    assert daehee1_poly(1, 1)(1) == F(1, 2) == bernoulli_poly_at(1, 3, 2)


def test_second_kind_examples():
    assert daehee2_number(0, 2) == 1
    assert daehee2_number(1, 1) == F(-1, 2)
    assert daehee2_number(2, 1) == F(-1, 3)
    assert daehee2_number_gf(0, 5) == 1
    assert daehee2_number_gf(1, 1) == F(-1, 2)
    assert daehee2_number_gf(1, 2) == -1
    assert daehee2_poly(0, 3).coeffs == (1,)
    assert daehee2_poly(1, 1).coeffs == (F(-1, 2), -1)
    assert daehee2_poly(1, 1)(0) == daehee2_number(1, 1)


def test_kind_validation():
    assert DaeheeKind(Kind.SECOND, 2).order == 2
    with pytest.raises(ValueError):
        DaeheeKind(Kind.FIRST, 0)
    with pytest.raises(ValueError):
        daehee1_number_closed(3, 0)


def test_closed_rejects_small_cache():
    with pytest.raises(IndexError):
        daehee1_number_closed(5, 3, StirlingCache(6))


def test_gf_rejects_small_truncation():
    with pytest.raises(ValueError):
        daehee1_number_gf(5, 1, order=4)
    with pytest.raises(ValueError):
        daehee2_number_gf(5, 1, order=3)


# --- route agreement ---------------------------------------------------

def test_first_kind_routes_agree():
    for n, k in GRID:
        closed = daehee1_number_closed(n, k)
        assert daehee1_number_gf(n, k) == closed
        assert daehee1_number_stirling_bernoulli(n, k) == closed
        assert daehee1_number_multinomial(n, k) == closed


@pytest.mark.parametrize("n, k", [(n, k) for n in range(7) for k in range(1, 4)])
def test_compositions_oracle_agrees(n, k):
    assert compositions_oracle(n, k) == daehee1_number_closed(n, k)


def test_order_one_closed_form():
    for n in range(21):
        assert daehee1_number_closed(n, 1) == F((-1) ** n * factorial(n), n + 1)


def test_second_kind_routes_agree():
    for n, k in GRID:
        assert daehee2_number(n, k) == daehee2_number_gf(n, k)


def test_gf_value_independent_of_truncation():
    for n in range(8):
        assert daehee1_number_gf(n, 3, order=n) == daehee1_number_gf(n, 3, order=30)
        assert daehee2_number_gf(n, 3, order=n) == daehee2_number_gf(n, 3, order=30)


def test_number_is_bernoulli_at_one():
    for n in range(17):
        for k in range(1, 7):
            assert daehee1_number_closed(n, k) == bernoulli_poly_at(n, n + k + 1, 1)


@pytest.mark.parametrize("k", range(1, 5))
def test_poly_is_shifted_bernoulli(k):
    for n in range(13):
        assert daehee1_poly(n, k) == bernoulli_poly(n, n + k + 1).shift(1)


@pytest.mark.parametrize("k", range(1, 5))
def test_second_kind_poly_is_shifted_bernoulli(k):
    for n in range(13):
        assert daehee2_poly(n, k) * (-1) ** n == bernoulli_poly(n, n + k + 1).shift(k + 1)


@pytest.mark.parametrize("k", range(1, 5))
def test_poly_routes_agree(k):
    for n in range(13):
        assert daehee1_poly(n, k) == daehee1_poly_gf(n, k)
        assert daehee2_poly(n, k) == daehee2_poly_gf(n, k)


def test_poly_constant_term_is_number():
    for n in range(13):
        for k in range(1, 5):
            assert daehee1_poly(n, k)(0) == daehee1_number_closed(n, k)
            assert daehee2_poly(n, k)(0) == daehee2_number(n, k)
