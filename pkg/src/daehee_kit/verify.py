"""Executable catalogue of the Daehee/Bernoulli/Stirling identities.

Each identity is a generator of ``(indices, lhs, rhs)`` triples over a grid;
:func:`check_identity` asserts exact equality at every point and keeps the
first counterexample. Polynomial identities compare whole polynomials
(coefficientwise) and additionally evaluate both sides at the sample points.

Canonical values used on the "definition" side of an identity:

* ``D_n^(k)`` and ``D^_n^(k)`` numbers: the generating-function route;
* ``D_n^(k)(x)`` and ``D^_n^(k)(x)``: binomial convolution of those numbers
  with falling factorials (the generating function times ``(1+t)^x`` or
  ``(1-t)^x``).

Stirling tables are read through a :class:`StirlingCache` that callers may
replace, which is how the fault-injection tests work.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterator, Sequence

from .algebra import (
    RationalPolynomial,
    as_fraction,
    binomial_series,
    egf_coefficient,
    series_mul,
)
from .bernoulli import bernoulli_number, bernoulli_poly
from .combinat import StirlingCache, binomial, binomial_poly, falling_factorial_poly
from .daehee import (
    daehee1_number_closed,
    daehee1_number_gf,
    daehee1_number_multinomial,
    daehee1_number_stirling_bernoulli,
    daehee1_poly,
    daehee1_poly_gf,
    daehee1_series,
    daehee2_number,
    daehee2_number_gf,
    daehee2_poly,
    daehee2_poly_gf,
)
from .padic import difference_identity_check, volkenborn_exact

DEFAULT_N_MAX = 20
DEFAULT_K_MAX = 6
DEFAULT_X_SAMPLES = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-3, 2))
GUARD = 2


class IdentityId(str, enum.Enum):
    T1 = "T1"
    C2 = "C2"
    T3a = "T3a"
    T3b = "T3b"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"
    T8 = "T8"
    T9 = "T9"
    T10 = "T10"
    T11 = "T11"
    T12 = "T12"
    E36 = "E36"
    E4 = "E4"
    E9 = "E9"
    E12 = "E12"
    E19 = "E19"

    @classmethod
    def parse(cls, name: str) -> "IdentityId":
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown identity {name!r}; expected one of {', '.join(i.value for i in cls)}") from None


DESCRIPTIONS = {
    IdentityId.T1: "D_n^(k) = S1(n+k,k) / C(n+k,k)",
    IdentityId.C2: "S1(n+k,k) / C(n+k,k) = B_n^(n+k+1)(1)",
    IdentityId.T3a: "D_n^(k) = sum over compositions of multinomial * D_l1...D_lk",
    IdentityId.T3b: "D_n^(k) = sum_l S1(n,l) B_l^(k)",
    IdentityId.T4: "B_m^(k) = sum_n D_n^(k) S2(m,n)",
    IdentityId.T5: "D_n^(k)(x) = sum_l S1(n,l) B_l^(k)(x)",
    IdentityId.T6: "D_n^(k)(x) = B_n^(n+k+1)(x+1) = sum_l C(n,l) B_l^(n+k+1) (x+1)^(n-l)",
    IdentityId.T7: "B_m^(k)(x) = sum_n S2(m,n) D_n^(k)(x)",
    IdentityId.T8: "D^_n^(k) = sum_l [n l] B_l^(k)",
    IdentityId.T9: "B_m^(k) = sum_n D^_n^(k) (-1)^(n-m) S2(m,n)",
    IdentityId.T10: "(-1)^n D^_n^(k)(x) = B_n^(n+k+1)(x+k+1), with D^_n^(k)(x) = sum_l (-1)^(n-l) S1(n,l) B_l^(k)(-x)",
    IdentityId.T11: "B_m^(k)(-x) = sum_n D^_n^(k)(x) (-1)^(m-n) S2(m,n)",
    IdentityId.T12: "(-1)^n D_n^(k)(x)/n! = sum_m C(n-1,n-m)/m! (-1)^m D^_m^(k)(-x)",
    IdentityId.E36: "D^_n^(k)(x)/n! = sum_m C(n-1,n-m)/m! D_m^(k)(-x)",
    IdentityId.E4: "I(f(x+1)) - I(f) = f'(0) for f = x^j",
    IdentityId.E9: "I(C(x,n)) = D_n / n!",
    IdentityId.E12: "(log(1+t)/t)^k = sum_n B_n^(n+k+1)(1) t^n/n!",
    IdentityId.E19: "(log(1+t)/t)^k (1+t)^x = sum_n B_n^(n+k+1)(x+1) t^n/n! at sampled x",
}

POLYNOMIAL_IDENTITIES = frozenset(
    {IdentityId.T5, IdentityId.T6, IdentityId.T7, IdentityId.T10, IdentityId.T11, IdentityId.T12, IdentityId.E36}
)


@dataclass(frozen=True)
class Failure:
    indices: dict
    lhs: object
    rhs: object


@dataclass(frozen=True)
class VerificationReport:
    identity: IdentityId
    n_max: int
    k_max: int
    x_samples: tuple
    passed: bool
    points: int
    first_failure: Failure | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class Grid:
    n_max: int
    k_max: int
    x_samples: tuple
    stirling: StirlingCache

    def ns(self):
        return range(self.n_max + 1)

    def ks(self):
        return range(1, self.k_max + 1)


Point = tuple  # (indices dict, lhs, rhs)


# --- identity generators ---------------------------------------------


def _t1(g: Grid) -> Iterator[Point]:
    for n in g.ns():
        for k in g.ks():
            yield {"n": n, "k": k}, daehee1_number_gf(n, k), daehee1_number_closed(n, k, g.stirling)


def _c2(g: Grid) -> Iterator[Point]:
    for n in g.ns():
        for k in g.ks():
            yield {"n": n, "k": k}, daehee1_number_closed(n, k, g.stirling), bernoulli_poly(n, n + k + 1)(1)


def _t3a(g: Grid) -> Iterator[Point]:
    for n in g.ns():
        for k in g.ks():
            yield {"n": n, "k": k}, daehee1_number_gf(n, k), daehee1_number_multinomial(n, k)


def _t3b(g: Grid) -> Iterator[Point]:
    for n in g.ns():
        for k in g.ks():
            yield {"n": n, "k": k}, daehee1_number_gf(n, k), daehee1_number_stirling_bernoulli(n, k, g.stirling)


def _t4(g: Grid) -> Iterator[Point]:
    for m in g.ns():
        for k in g.ks():
            rhs = sum((daehee1_number_gf(n, k) * g.stirling.s2(m, n) for n in range(m + 1)), Fraction(0))
            yield {"m": m, "k": k}, bernoulli_number(m, k), rhs


def _t5(g: Grid) -> Iterator[Point]:
    for n in g.ns():
        for k in g.ks():
            yield {"n": n, "k": k}, daehee1_poly_gf(n, k), daehee1_poly(n, k, g.stirling)


def _t6(g: Grid) -> Iterator[Point]:
    for n in g.ns():
        for k in g.ks():
            a = n + k + 1
            lhs = daehee1_poly_gf(n, k)
            mid = bernoulli_poly(n, a).shift(1)
            xp1 = RationalPolynomial([1, 1])
            expanded = RationalPolynomial()
            power = RationalPolynomial([1])
            # sum_l C(n,l) B_l (x+1)^(n-l), built from the top power down
            for l in range(n, -1, -1):
                expanded = expanded + power * (comb(n, l) * bernoulli_number(l, a))
                power = power * xp1
            yield {"n": n, "k": k, "form": "B(x+1)"}, lhs, mid
            yield {"n": n, "k": k, "form": "expanded"}, lhs, expanded


def _t7(g: Grid) -> Iterator[Point]:
    for m in g.ns():
        for k in g.ks():
            rhs = RationalPolynomial()
            for n in range(m + 1):
                rhs = rhs + daehee1_poly_gf(n, k) * g.stirling.s2(m, n)
            yield {"m": m, "k": k}, bernoulli_poly(m, k), rhs


def _t8(g: Grid) -> Iterator[Point]:
    for n in g.ns():
        for k in g.ks():
            yield {"n": n, "k": k}, daehee2_number_gf(n, k), daehee2_number(n, k, g.stirling)


def _t9(g: Grid) -> Iterator[Point]:
    for m in g.ns():
        for k in g.ks():
            rhs = sum(
                (daehee2_number_gf(n, k) * (-1) ** (m - n) * g.stirling.s2(m, n) for n in range(m + 1)),
                Fraction(0),
            )
            yield {"m": m, "k": k}, bernoulli_number(m, k), rhs


def _t10(g: Grid) -> Iterator[Point]:
    for n in g.ns():
        for k in g.ks():
            rhs = bernoulli_poly(n, n + k + 1).shift(k + 1)
            sign = (-1) ** n
            yield {"n": n, "k": k, "form": "generating function"}, daehee2_poly_gf(n, k) * sign, rhs
            yield {"n": n, "k": k, "form": "Stirling-Bernoulli"}, daehee2_poly(n, k, g.stirling) * sign, rhs


def _t11(g: Grid) -> Iterator[Point]:
    for m in g.ns():
        for k in g.ks():
            rhs = RationalPolynomial()
            for n in range(m + 1):
                rhs = rhs + daehee2_poly_gf(n, k) * ((-1) ** (m - n) * g.stirling.s2(m, n))
            yield {"m": m, "k": k}, bernoulli_poly(m, k).reflect(), rhs


def _t12(g: Grid) -> Iterator[Point]:
    # the sum starts at m = 0; C(n-1, n) vanishes for n >= 1 and is 1 at n = 0
    for n in g.ns():
        for k in g.ks():
            lhs = daehee1_poly_gf(n, k) * Fraction((-1) ** n, factorial(n))
            rhs = RationalPolynomial()
            for m in range(n + 1):
                w = Fraction(binomial(n - 1, n - m) * (-1) ** m, factorial(m))
                if w:
                    rhs = rhs + daehee2_poly_gf(m, k).reflect() * w
            yield {"n": n, "k": k}, lhs, rhs


def _e36(g: Grid) -> Iterator[Point]:
    for n in g.ns():
        for k in g.ks():
            lhs = daehee2_poly_gf(n, k) / factorial(n)
            rhs = RationalPolynomial()
            for m in range(n + 1):
                w = Fraction(binomial(n - 1, n - m), factorial(m))
                if w:
                    rhs = rhs + daehee1_poly_gf(m, k).reflect() * w
            yield {"n": n, "k": k}, lhs, rhs


def _e4(g: Grid) -> Iterator[Point]:
    for j in range(max(g.n_max, 10) + 1):
        shifted, plain, slope = difference_identity_check(RationalPolynomial([0] * j + [1]))
        yield {"j": j}, shifted - plain, slope


def _e9(g: Grid) -> Iterator[Point]:
    for n in g.ns():
        yield {"n": n}, volkenborn_exact(binomial_poly(n)), daehee1_number_gf(n, 1) / factorial(n)


def _e12(g: Grid) -> Iterator[Point]:
    for k in g.ks():
        series = daehee1_series(k, g.n_max + k + GUARD)
        for n in g.ns():
            yield {"n": n, "k": k}, egf_coefficient(series, n), bernoulli_poly(n, n + k + 1)(1)


def _e19(g: Grid) -> Iterator[Point]:
    order = g.n_max + g.k_max + GUARD
    for x in g.x_samples:
        power = binomial_series(x, order)
        for k in g.ks():
            series = series_mul(daehee1_series(k, order), power)
            for n in g.ns():
                lhs = egf_coefficient(series, n)
                yield {"n": n, "k": k, "x": str(x)}, lhs, bernoulli_poly(n, n + k + 1)(x + 1)


GENERATORS: dict[IdentityId, Callable[[Grid], Iterator[Point]]] = {
    IdentityId.T1: _t1,
    IdentityId.C2: _c2,
    IdentityId.T3a: _t3a,
    IdentityId.T3b: _t3b,
    IdentityId.T4: _t4,
    IdentityId.T5: _t5,
    IdentityId.T6: _t6,
    IdentityId.T7: _t7,
    IdentityId.T8: _t8,
    IdentityId.T9: _t9,
    IdentityId.T10: _t10,
    IdentityId.T11: _t11,
    IdentityId.T12: _t12,
    IdentityId.E36: _e36,
    IdentityId.E4: _e4,
    IdentityId.E9: _e9,
    IdentityId.E12: _e12,
    IdentityId.E19: _e19,
}


def _sides_agree(lhs, rhs, x_samples) -> tuple[bool, dict | None]:
    if isinstance(lhs, RationalPolynomial):
        if lhs != rhs:
            return False, None
        # redundant smoke check at the sample points
        for x in x_samples:
            if lhs(x) != rhs(x):
                return False, {"x": str(x)}
        return True, None
    return lhs == rhs, None


def check_identity(
    identity: IdentityId | str,
    n_max: int = DEFAULT_N_MAX,
    k_max: int = DEFAULT_K_MAX,
    x_samples: Sequence = DEFAULT_X_SAMPLES,
    stirling: StirlingCache | None = None,
) -> VerificationReport:
    """Check one identity at every grid point, exactly."""
    if not isinstance(identity, IdentityId):
        identity = IdentityId.parse(identity)
    if n_max < 0 or k_max < 1:
        raise ValueError("need n_max >= 0 and k_max >= 1")
    xs = tuple(as_fraction(x) for x in x_samples)
    if stirling is None:
        stirling = StirlingCache(n_max + k_max + GUARD)
    grid = Grid(n_max, k_max, xs, stirling)
    start = time.perf_counter()
    points = 0
    failure = None
    for indices, lhs, rhs in GENERATORS[identity](grid):
        points += 1
        ok, extra = _sides_agree(lhs, rhs, xs)
        if not ok:
            if extra:
                indices = {**indices, **extra}
            failure = Failure(indices, lhs, rhs)
            break
    return VerificationReport(
        identity=identity,
        n_max=n_max,
        k_max=k_max,
        x_samples=xs,
        passed=failure is None,
        points=points,
        first_failure=failure,
        elapsed=time.perf_counter() - start,
    )


def _check_star(args) -> VerificationReport:
    return check_identity(*args)


def check_all(
    n_max: int = DEFAULT_N_MAX,
    k_max: int = DEFAULT_K_MAX,
    x_samples: Sequence = DEFAULT_X_SAMPLES,
    ids: Sequence[IdentityId | str] | None = None,
    jobs: int = 1,
    stirling: StirlingCache | None = None,
) -> list[VerificationReport]:
    """Run identities (all by default) and return reports in catalogue order."""
    chosen = [i if isinstance(i, IdentityId) else IdentityId.parse(i) for i in (ids or list(IdentityId))]
    order = list(IdentityId)
    chosen = sorted(set(chosen), key=order.index)
    xs = tuple(as_fraction(x) for x in x_samples)
    if jobs > 1 and len(chosen) > 1 and stirling is None:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_check_star, [(i, n_max, k_max, xs) for i in chosen]))
    return [check_identity(i, n_max, k_max, xs, stirling) for i in chosen]


def all_passed(reports: Sequence[VerificationReport]) -> bool:
    return all(r.passed for r in reports)


def recompute(identity: IdentityId, indices: dict, n_max: int, k_max: int, x_samples, stirling=None):
    """Re-run the generator and return the sides at ``indices`` (for auditing failures)."""
    xs = tuple(as_fraction(x) for x in x_samples)
    stirling = stirling or StirlingCache(n_max + k_max + GUARD)
    grid = Grid(n_max, k_max, xs, stirling)
    for idx, lhs, rhs in GENERATORS[identity](grid):
        if all(indices.get(key) == v for key, v in idx.items()):
            return lhs, rhs
    raise KeyError(f"no grid point {indices} for {identity.value}")
