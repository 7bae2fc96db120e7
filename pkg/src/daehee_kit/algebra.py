"""Exact scalars, dense polynomials in x and truncated power series in t.

Scalars are :class:`fractions.Fraction` throughout. Series store *ordinary*
coefficients; exponential-generating-function semantics only appear in
:func:`egf_coefficient`.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Sequence, Union

from . import kernels

Scalar = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


def _common_denominator(coeffs: Sequence[Fraction]) -> int:
    d = 1
    for c in coeffs:
        d = lcm(d, c.denominator)
    return d


def _integer_numerators(coeffs: Sequence[Fraction], d: int) -> list[int]:
    return [c.numerator * (d // c.denominator) for c in coeffs]


class TruncatedSeries:
    """Power series in t known exactly up to and including ``t**order``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [as_fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(cs) < order + 1:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs[: order + 1])

    @classmethod
    def _raw(cls, coeffs: tuple) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "TruncatedSeries":
        return cls([value], order)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        """The series ``t``."""
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, i: int) -> Fraction:
        if i < 0 or i > self.order:
            raise IndexError(f"coefficient t^{i} is beyond truncation order {self.order}")
        return self._coeffs[i]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self._coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return TruncatedSeries._raw(self._coeffs[: order + 1])

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_add(self, other)
        if isinstance(other, (int, Fraction)):
            cs = list(self._coeffs)
            cs[0] += other
            return TruncatedSeries._raw(tuple(cs))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._raw(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        if isinstance(other, (TruncatedSeries, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries._raw(tuple(c * other for c in self._coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        return series_pow(self, k)

    def scale_variable(self, c: Scalar) -> "TruncatedSeries":
        """Substitute ``t -> c*t``."""
        c = as_fraction(c)
        out = []
        ck = Fraction(1)
        for a in self._coeffs:
            out.append(a * ck)
            ck *= c
        return TruncatedSeries._raw(tuple(out))

    def egf(self) -> list[Fraction]:
        """All exponential coefficients ``n! * a_n`` up to the order."""
        return [egf_coefficient(self, n) for n in range(self.order + 1)]


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries._raw(tuple(a.coeffs[i] + b.coeffs[i] for i in range(n + 1)))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at ``min(a.order, b.order)``.

    Both operands are brought over a common denominator first so the
    quadratic loop runs on integers.
    """
    n = min(a.order, b.order)
    ac = a.coeffs[: n + 1]
    bc = b.coeffs[: n + 1]
    da = _common_denominator(ac)
    db = _common_denominator(bc)
    prod = kernels.convolve(_integer_numerators(ac, da), _integer_numerators(bc, db), n)
    d = da * db
    return TruncatedSeries._raw(tuple(Fraction(c, d) for c in prod))


def series_pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        raise ValueError("series_pow needs a nonnegative exponent")
    result = TruncatedSeries.constant(1, a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_log1p(order: int) -> TruncatedSeries:
    """``log(1+t)`` up to ``t**order``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    cs = [Fraction(0)] + [Fraction((-1) ** (i + 1), i) for i in range(1, order + 1)]
    return TruncatedSeries._raw(tuple(cs))


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """``exp(a)`` for a series with zero constant term.

    Uses ``n*g_n = sum_{j=1..n} j*a_j*g_{n-j}``, which follows from ``g' = a'g``.
    """
    if a.coeffs[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    n_max = a.order
    g = [Fraction(1)] + [Fraction(0)] * n_max
    ja = [j * a.coeffs[j] for j in range(n_max + 1)]
    for n in range(1, n_max + 1):
        s = sum((ja[j] * g[n - j] for j in range(1, n + 1)), Fraction(0))
        g[n] = s / n
    return TruncatedSeries._raw(tuple(g))


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """``1/a`` for a series with nonzero constant term."""
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ValueError("series_reciprocal needs a nonzero constant term")
    inv0 = 1 / a0
    r = [inv0]
    for n in range(1, a.order + 1):
        s = sum((a.coeffs[j] * r[n - j] for j in range(1, n + 1)), Fraction(0))
        r.append(-s * inv0)
    return TruncatedSeries._raw(tuple(r))


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(t))`` by Horner's rule in the inner series."""
    if inner.coeffs[0] != 0:
        raise ValueError("series_compose needs an inner series with zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = TruncatedSeries.constant(outer.coeffs[n], n)
    for i in range(n - 1, -1, -1):
        acc = series_mul(acc, inner) + outer.coeffs[i]
    return acc


def series_shift_divide(a: TruncatedSeries, j: int) -> TruncatedSeries:
    """Divide by ``t**j``; the first ``j`` coefficients must vanish."""
    if j < 0:
        raise ValueError("shift must be >= 0")
    if j > a.order:
        raise ValueError(f"cannot divide a series of order {a.order} by t^{j}")
    if any(c != 0 for c in a.coeffs[:j]):
        raise ValueError(f"series is not divisible by t^{j}")
    return TruncatedSeries._raw(a.coeffs[j:])


def egf_coefficient(a: TruncatedSeries, n: int) -> Fraction:
    """``n!`` times the ordinary coefficient of ``t**n``."""
    if n < 0 or n > a.order:
        raise ValueError(f"index {n} is outside truncation order {a.order}")
    return a.coeffs[n] * factorial(n)


def exp_minus_one(order: int) -> TruncatedSeries:
    """``e^t - 1`` up to ``t**order``."""
    return TruncatedSeries([0] + [Fraction(1, factorial(i)) for i in range(1, order + 1)], order)


def binomial_series(x: Scalar, order: int) -> TruncatedSeries:
    """``(1+t)**x`` for rational ``x``, as ``exp(x*log(1+t))``."""
    return series_exp(series_log1p(order) * as_fraction(x))


class RationalPolynomial:
    """Dense polynomial in x; ``coeffs[i]`` multiplies ``x**i``.

    Trailing zeros are stripped, so equality is coefficientwise equality.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, value: Scalar) -> "RationalPolynomial":
        return cls([value])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self._coeffs)
        return f"RationalPolynomial([{body}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == RationalPolynomial([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial([other])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return RationalPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RationalPolynomial)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(c * other for c in self._coeffs)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __call__(self, x0: Scalar) -> Fraction:
        return poly_eval(self, x0)

    def compose_affine(self, a: Scalar, b: Scalar) -> "RationalPolynomial":
        """The polynomial ``x -> p(a*x + b)``."""
        lin = RationalPolynomial([b, a])
        acc = RationalPolynomial()
        for c in reversed(self._coeffs):
            acc = acc * lin + c
        return acc

    def shift(self, b: Scalar) -> "RationalPolynomial":
        return self.compose_affine(1, b)

    def reflect(self) -> "RationalPolynomial":
        """``x -> p(-x)``."""
        return RationalPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self._coeffs))

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(i * c for i, c in enumerate(self._coeffs) if i)


def poly_eval(p: RationalPolynomial, x0: Scalar) -> Fraction:
    x0 = as_fraction(x0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc
