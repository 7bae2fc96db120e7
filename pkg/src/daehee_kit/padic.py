"""Finite witnesses of the p-adic invariant (Volkenborn) integral.

For a polynomial f the integral is exact: ``I(x**j) = B_j`` with the order-1
Bernoulli numbers (``B_1 = -1/2``). The literal averages
``p**-N * sum_{x < p**N} f(x)`` exist only to show p-adic convergence
towards that value, measured by valuations of the error.

The order-1 Bernoulli numbers here come from the classical recurrence
``sum_{j<=m} C(m+1, j) B_j = 0``, not from the series engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable

from . import kernels
from .algebra import RationalPolynomial, Scalar, as_fraction
from .combinat import falling_factorial_poly, rising_factorial_poly

DEFAULT_BUDGET = 2_000_000
INFINITE = math.inf


class BudgetExceeded(ValueError):
    """Literal partial sum would need more terms than the budget allows."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


@lru_cache(maxsize=None)
def _bernoulli1(m_max: int) -> tuple:
    b = [Fraction(1)]
    for m in range(1, m_max + 1):
        s = sum((comb(m + 1, j) * b[j] for j in range(m)), Fraction(0))
        b.append(-s / (m + 1))
    return tuple(b)


def bernoulli1(m: int) -> Fraction:
    return _bernoulli1(max(m, 32))[m]


def valuation(r: Scalar, p: int) -> int | float:
    """p-adic valuation of a rational; ``INFINITE`` for zero."""
    _require_prime(p)
    r = as_fraction(r)
    if r == 0:
        return INFINITE

    def v(n: int) -> int:
        n = abs(n)
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        return e

    return v(r.numerator) - v(r.denominator)


# --- exact integrals ---------------------------------------------------


def volkenborn_exact(f: RationalPolynomial) -> Fraction:
    """Exact Volkenborn integral of a polynomial: ``sum_l f_l * B_l``."""
    return sum((c * bernoulli1(l) for l, c in enumerate(f.coeffs)), Fraction(0))


def integrate_one_variable(g: RationalPolynomial) -> RationalPolynomial:
    """Integrate ``y`` out of ``g(s + y)``, leaving a polynomial in s.

    Coefficient of ``s**m`` is ``sum_j g_j C(j, m) B_(j-m)``.
    """
    d = g.degree
    out = []
    for m in range(d + 1):
        out.append(
            sum((g.coeffs[j] * comb(j, m) * bernoulli1(j - m) for j in range(m, d + 1)), Fraction(0))
        )
    return RationalPolynomial(out)


def factorial_integrand(n: int, shift: Scalar = 0, sign: int = 1, rising: bool = False) -> RationalPolynomial:
    """``(sign*s + shift)_n`` (falling) or its rising counterpart, as a polynomial in s."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    base = rising_factorial_poly(n) if rising else falling_factorial_poly(n)
    return base.compose_affine(sign, as_fraction(shift))


def volkenborn_exact_multi(
    k: int, n: int, shift: Scalar = 0, sign: int = 1, rising: bool = False
) -> Fraction:
    """k-fold integral of ``(sign*(x_1+...+x_k) + shift)`` raised to a falling/rising power n.

    Variables are integrated one at a time; the running integrand stays a
    univariate polynomial in the partial sum of the remaining variables.

    ``sign=1, shift=x`` gives ``D_n^(k)(x)``; ``rising=True, shift=-x`` gives
    the second-kind polynomial ``D^_n^(k)(x)``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    g = factorial_integrand(n, shift, sign, rising)
    for _ in range(k):
        g = integrate_one_variable(g)
    return g(0)


def daehee1_integral(n: int, k: int, x: Scalar = 0) -> Fraction:
    return volkenborn_exact_multi(k, n, shift=x)


def daehee2_integral(n: int, k: int, x: Scalar = 0) -> Fraction:
    return volkenborn_exact_multi(k, n, shift=-as_fraction(x), rising=True)


def difference_identity_check(f: RationalPolynomial) -> tuple[Fraction, Fraction, Fraction]:
    """``(I(f(x+1)), I(f), f'(0))``; the first minus the second is the third."""
    return volkenborn_exact(f.shift(1)), volkenborn_exact(f), f.derivative()(0)


# --- literal partial sums ------------------------------------------------


def faulhaber_power_sums(count: int, max_exp: int) -> list[int]:
    """``sum_{x<count} x**e`` via ``(B_{e+1}(count) - B_{e+1}) / (e+1)``."""
    out = []
    for e in range(max_exp + 1):
        m = e + 1
        total = sum(
            (comb(m, l) * bernoulli1(l) * Fraction(count) ** (m - l) for l in range(m)),
            Fraction(0),
        )
        value = total / m
        assert value.denominator == 1
        out.append(value.numerator)
    return out


def power_sums(count: int, max_exp: int, budget: int = DEFAULT_BUDGET, closed_form: bool = True) -> list[int]:
    if count <= budget:
        return kernels.power_sums(count, max_exp)
    if not closed_form:
        raise BudgetExceeded(
            f"{count} terms exceed the budget of {budget}"
        )
    return faulhaber_power_sums(count, max_exp)


def volkenborn_partial(
    f: RationalPolynomial,
    p: int,
    depth: int,
    budget: int = DEFAULT_BUDGET,
    closed_form: bool = True,
) -> Fraction:
    """``p**-depth * sum_{x=0}^{p**depth - 1} f(x)``, exactly."""
    _require_prime(p)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    count = p**depth
    if f.is_zero():
        return Fraction(0)
    sums = power_sums(count, f.degree, budget, closed_form)
    return sum((c * s for c, s in zip(f.coeffs, sums)), Fraction(0)) / count


def _average_over_shifts(g: RationalPolynomial, count: int, sums: list[int]) -> RationalPolynomial:
    # (1/count) * sum_{y<count} g(s + y), as a polynomial in s
    d = g.degree
    out = []
    for m in range(d + 1):
        out.append(sum((g.coeffs[j] * comb(j, m) * sums[j - m] for j in range(m, d + 1)), Fraction(0)))
    return RationalPolynomial(out) / count


def volkenborn_partial_multi(
    g: RationalPolynomial,
    k: int,
    p: int,
    depth: int,
    budget: int = DEFAULT_BUDGET,
    closed_form: bool = True,
) -> Fraction:
    """k-fold partial average of ``g(x_1 + ... + x_k)`` over ``[0, p**depth)**k``.

    The k-fold sum factors through one-variable shifted sums, so the literal
    cost is ``p**depth`` terms per variable.
    """
    _require_prime(p)
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return volkenborn_partial(g, p, depth, budget, closed_form)
    count = p**depth
    if g.is_zero():
        return Fraction(0)
    sums = power_sums(count, g.degree, budget, closed_form)
    for _ in range(k):
        g = _average_over_shifts(g, count, sums)
    return g(0)


@dataclass(frozen=True)
class VolkenbornProbe:
    p: int
    depth: int
    integrand: RationalPolynomial
    partial_sum: Fraction
    exact_value: Fraction
    valuation: int | float

    @property
    def error(self) -> Fraction:
        return self.partial_sum - self.exact_value


def convergence_probe(
    f: RationalPolynomial,
    p: int,
    depths: Iterable[int],
    k: int = 1,
    budget: int = DEFAULT_BUDGET,
    closed_form: bool = True,
) -> list[VolkenbornProbe]:
    """One probe per depth, comparing the k-fold partial average with the exact integral."""
    _require_prime(p)
    depths = list(depths)
    if not depths:
        raise ValueError("depths must be nonempty")
    exact = f
    for _ in range(k):
        exact = integrate_one_variable(exact)
    exact_value = exact(0)
    probes = []
    for depth in depths:
        partial = volkenborn_partial_multi(f, k, p, depth, budget, closed_form)
        probes.append(
            VolkenbornProbe(p, depth, f, partial, exact_value, valuation(partial - exact_value, p))
        )
    return probes
