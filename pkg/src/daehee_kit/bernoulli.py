"""Higher-order (Norlund) Bernoulli numbers and polynomials.

``B_n^(a)`` is n! times the coefficient of t^n in ``(t/(e^t-1))^a``. The
base series is inverted once per truncation order and then powered by
repeated squaring; n-dependent orders such as ``n+k+1`` go through the same
path.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import (
    RationalPolynomial,
    Scalar,
    TruncatedSeries,
    egf_coefficient,
    exp_minus_one,
    series_mul,
    series_reciprocal,
    series_shift_divide,
)

_ORDER_STEP = 16


def _rounded_order(n: int) -> int:
    return max(_ORDER_STEP, -(-n // _ORDER_STEP) * _ORDER_STEP)


@lru_cache(maxsize=None)
def _todd_series(order: int) -> TruncatedSeries:
    # t/(e^t - 1); one extra term is consumed by the division by t
    return series_reciprocal(series_shift_divide(exp_minus_one(order + 1), 1))


@lru_cache(maxsize=None)
def bernoulli_series(alpha: int, order: int) -> TruncatedSeries:
    """``(t/(e^t-1))**alpha`` up to ``t**order``."""
    if alpha < 0:
        raise ValueError("order alpha must be >= 0")
    if alpha == 0:
        return TruncatedSeries.constant(1, order)
    if alpha == 1:
        return _todd_series(order)
    half = bernoulli_series(alpha // 2, order)
    sq = series_mul(half, half)
    return series_mul(sq, _todd_series(order)) if alpha % 2 else sq


def bernoulli_number(n: int, alpha: int, order: int | None = None) -> Fraction:
    """``B_n^(alpha)``, read off the power series.

    ``order`` pins the truncation; by default a shared, rounded-up order is
    used so grid sweeps hit the cache.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if order is None:
        order = _rounded_order(n)
    elif order < n:
        raise ValueError(f"truncation order {order} is below n = {n}")
    return egf_coefficient(bernoulli_series(alpha, order), n)


@lru_cache(maxsize=None)
def bernoulli_poly(n: int, alpha: int) -> RationalPolynomial:
    """``B_n^(alpha)(x) = sum_l C(n,l) B_l^(alpha) x^(n-l)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [Fraction(0)] * (n + 1)
    for l in range(n + 1):
        coeffs[n - l] = comb(n, l) * bernoulli_number(l, alpha)
    return RationalPolynomial(coeffs)


def bernoulli_poly_at(n: int, alpha: int, x0: Scalar) -> Fraction:
    return bernoulli_poly(n, alpha)(x0)


def bernoulli_numbers_by_convolution(n_max: int, alpha: int) -> list[Fraction]:
    """``B_0..B_{n_max}`` of order ``alpha`` from binomial convolution with order 1.

    Independent of the squaring in :func:`bernoulli_series`; only the
    order-1 values come from the series route.
    """
    base = [bernoulli_number(j, 1) for j in range(n_max + 1)]
    current = [Fraction(1)] + [Fraction(0)] * n_max
    for _ in range(alpha):
        current = [
            sum((comb(n, j) * current[j] * base[n - j] for j in range(n + 1)), Fraction(0))
            for n in range(n_max + 1)
        ]
    return current
