"""Stirling numbers, binomials and factorial polynomials.

Stirling values come from the integer recurrences only, never from the
series engine, so the two can check each other.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from . import kernels
from .algebra import RationalPolynomial


class StirlingCache:
    """Triangular tables of S1 (signed) and S2 for all indices up to ``max_n``."""

    def __init__(self, max_n: int):
        if max_n < 0:
            raise ValueError("max_n must be >= 0")
        self.max_n = max_n
        self._s1 = tuple(tuple(r) for r in kernels.stirling1_rows(max_n))
        self._s2 = tuple(tuple(r) for r in kernels.stirling2_rows(max_n))

    def _check(self, n: int, l: int, name: str) -> None:
        if not (0 <= l <= n):
            raise ValueError(f"{name}({n}, {l}): need 0 <= second index <= first")
        if n > self.max_n:
            raise IndexError(f"{name}({n}, {l}) exceeds table bound {self.max_n}")

    def s1(self, n: int, l: int) -> int:
        self._check(n, l, "stirling1")
        return self._s1[n][l]

    def s1_unsigned(self, n: int, l: int) -> int:
        return (-1) ** (n - l) * self.s1(n, l)

    def s2(self, m: int, n: int) -> int:
        self._check(m, n, "stirling2")
        return self._s2[m][n]

    def s1_row(self, n: int) -> tuple:
        self._check(n, 0, "stirling1")
        return tuple(self.s1(n, l) for l in range(n + 1))


@lru_cache(maxsize=None)
def _cache_for(bound: int) -> StirlingCache:
    return StirlingCache(bound)


def stirling_cache(max_n: int) -> StirlingCache:
    """A shared cache covering at least ``max_n``; sizes are rounded up to 32."""
    return _cache_for(max(32, -(-max_n // 32) * 32))


def stirling1(n: int, l: int) -> int:
    """Signed Stirling number of the first kind, the coefficient of x^l in (x)_n."""
    if not (0 <= l <= n):
        raise ValueError(f"stirling1({n}, {l}): need 0 <= l <= n")
    return stirling_cache(n).s1(n, l)


def stirling1_unsigned(n: int, l: int) -> int:
    if not (0 <= l <= n):
        raise ValueError(f"stirling1_unsigned({n}, {l}): need 0 <= l <= n")
    return stirling_cache(n).s1_unsigned(n, l)


def stirling2(m: int, n: int) -> int:
    if not (0 <= n <= m):
        raise ValueError(f"stirling2({m}, {n}): need 0 <= n <= m")
    return stirling_cache(m).s2(m, n)


def binomial(n: int, m: int) -> int:
    """``C(n, m) = (n)_m / m!`` for any integer ``n`` and ``m >= 0``."""
    if m < 0:
        raise ValueError("binomial needs m >= 0")
    num = prod(n - i for i in range(m))
    return num // factorial(m)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts sum to {sum(parts)}, expected {n}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def falling_factorial_poly(n: int) -> RationalPolynomial:
    """``(x)_n = x(x-1)...(x-n+1)``, built by repeated multiplication."""
    if n < 0:
        raise ValueError("n must be >= 0")
    p = RationalPolynomial([1])
    for i in range(n):
        p = p * RationalPolynomial([-i, 1])
    return p


def rising_factorial_poly(n: int) -> RationalPolynomial:
    """``x(x+1)...(x+n-1)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    p = RationalPolynomial([1])
    for i in range(n):
        p = p * RationalPolynomial([i, 1])
    return p


def binomial_poly(n: int) -> RationalPolynomial:
    """``C(x, n)`` as a polynomial in x."""
    return falling_factorial_poly(n) / factorial(n)
