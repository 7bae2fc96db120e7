"""Daehee numbers and polynomials of order k, first and second kind.

Each quantity has at least two routes that share no intermediate values
beyond the primitive tables:

* first-kind numbers: Stirling closed form, generating function, the
  Stirling-Bernoulli sum, and k-fold convolution of the order-1 sequence;
* second-kind numbers: unsigned-Stirling-Bernoulli sum and generating
  function;
* polynomials: Stirling-Bernoulli sums, and the binomial convolution of
  the numbers with the falling factorials coming from ``(1+t)**x``.

Functions that read Stirling numbers accept an optional ``stirling``
cache so a test double can be substituted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import (
    RationalPolynomial,
    TruncatedSeries,
    egf_coefficient,
    series_log1p,
    series_mul,
    series_pow,
    series_shift_divide,
)
from .bernoulli import bernoulli_number, bernoulli_poly
from .combinat import StirlingCache, falling_factorial_poly, stirling_cache


class Kind(enum.Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class DaeheeKind:
    kind: Kind
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("Daehee order k must be a positive integer")


def _check(n: int, k: int) -> None:
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 1:
        raise ValueError("order k must be >= 1")


def _stirling(stirling: StirlingCache | None, bound: int) -> StirlingCache:
    if stirling is None:
        return stirling_cache(bound)
    if stirling.max_n < bound:
        raise IndexError(f"Stirling cache bound {stirling.max_n} is below required {bound}")
    return stirling


def default_truncation(n: int, k: int) -> int:
    """Truncation order used when none is given: n + k + 2 guard terms."""
    return n + k + 2


# --- first kind, numbers ------------------------------------------------


def daehee1_number_closed(n: int, k: int, stirling: StirlingCache | None = None) -> Fraction:
    """``S1(n+k, k) / C(n+k, k)``."""
    _check(n, k)
    cache = _stirling(stirling, n + k)
    return Fraction(cache.s1(n + k, k), comb(n + k, k))


@lru_cache(maxsize=None)
def daehee1_series(k: int, order: int) -> TruncatedSeries:
    """``(log(1+t)/t)**k`` up to ``t**order``."""
    base = series_shift_divide(series_log1p(order + 1), 1)
    return series_pow(base, k)


def daehee1_number_gf(n: int, k: int, order: int | None = None) -> Fraction:
    _check(n, k)
    if order is None:
        order = default_truncation(n, k)
    if order < n:
        raise ValueError(f"truncation order {order} is below n = {n}")
    return egf_coefficient(daehee1_series(k, order), n)


def daehee1_number_stirling_bernoulli(
    n: int, k: int, stirling: StirlingCache | None = None
) -> Fraction:
    """``sum_l S1(n,l) B_l^(k)``."""
    _check(n, k)
    cache = _stirling(stirling, n)
    return sum((cache.s1(n, l) * bernoulli_number(l, k) for l in range(n + 1)), Fraction(0))


def daehee_order1(m: int) -> Fraction:
    """``D_m = (-1)^m m!/(m+1)``."""
    return Fraction((-1) ** m * factorial(m), m + 1)


@lru_cache(maxsize=None)
def _convolution_table(n_max: int, k: int) -> tuple:
    base = [daehee_order1(m) for m in range(n_max + 1)]
    current = base
    for _ in range(k - 1):
        current = [
            sum((comb(n, j) * current[j] * base[n - j] for j in range(n + 1)), Fraction(0))
            for n in range(n_max + 1)
        ]
    return tuple(current)


def daehee1_number_multinomial(n: int, k: int) -> Fraction:
    """k-fold binomial convolution of the order-1 Daehee numbers."""
    _check(n, k)
    return _convolution_table(max(n, 16), k)[n]


# --- first kind, polynomials --------------------------------------------


def daehee1_poly(n: int, k: int, stirling: StirlingCache | None = None) -> RationalPolynomial:
    """``D_n^(k)(x) = sum_l S1(n,l) B_l^(k)(x)``."""
    _check(n, k)
    cache = _stirling(stirling, n)
    acc = RationalPolynomial()
    for l in range(n + 1):
        acc = acc + bernoulli_poly(l, k) * cache.s1(n, l)
    return acc


@lru_cache(maxsize=None)
def daehee1_poly_gf(n: int, k: int) -> RationalPolynomial:
    """``sum_j C(n,j) D_j^(k) (x)_(n-j)``, the coefficients of ``(log(1+t)/t)^k (1+t)^x``."""
    _check(n, k)
    acc = RationalPolynomial()
    for j in range(n + 1):
        acc = acc + falling_factorial_poly(n - j) * (comb(n, j) * daehee1_number_gf(j, k, n + k + 2))
    return acc


# --- second kind --------------------------------------------------------


def daehee2_number(n: int, k: int, stirling: StirlingCache | None = None) -> Fraction:
    """``sum_l [n l] B_l^(k)`` with unsigned first-kind Stirling numbers."""
    _check(n, k)
    cache = _stirling(stirling, n)
    return sum(
        (cache.s1_unsigned(n, l) * bernoulli_number(l, k) for l in range(n + 1)), Fraction(0)
    )


@lru_cache(maxsize=None)
def daehee2_series(k: int, order: int) -> TruncatedSeries:
    """``((1-t) log(1-t) / (-t))**k`` up to ``t**order``."""
    neg_log = -series_log1p(order + 1).scale_variable(-1)  # -log(1-t)
    base = series_mul(TruncatedSeries([1, -1], order), series_shift_divide(neg_log, 1))
    return series_pow(base, k)


def daehee2_number_gf(n: int, k: int, order: int | None = None) -> Fraction:
    _check(n, k)
    if order is None:
        order = default_truncation(n, k)
    if order < n:
        raise ValueError(f"truncation order {order} is below n = {n}")
    return egf_coefficient(daehee2_series(k, order), n)


def daehee2_poly(n: int, k: int, stirling: StirlingCache | None = None) -> RationalPolynomial:
    """``sum_l (-1)^(n-l) S1(n,l) B_l^(k)(-x)``."""
    _check(n, k)
    cache = _stirling(stirling, n)
    acc = RationalPolynomial()
    for l in range(n + 1):
        acc = acc + bernoulli_poly(l, k).reflect() * cache.s1_unsigned(n, l)
    return acc


@lru_cache(maxsize=None)
def daehee2_poly_gf(n: int, k: int) -> RationalPolynomial:
    """Coefficients of ``((1-t)log(1-t)/(-t))^k (1-t)^x``."""
    _check(n, k)
    acc = RationalPolynomial()
    for j in range(n + 1):
        w = comb(n, j) * (-1) ** (n - j) * daehee2_number_gf(j, k, n + k + 2)
        acc = acc + falling_factorial_poly(n - j) * w
    return acc
