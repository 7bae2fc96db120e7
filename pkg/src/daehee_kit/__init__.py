"""Exact higher-order Daehee, Bernoulli and Stirling numbers.

Everything is computed in exact rational arithmetic (``fractions.Fraction``).
The identity catalogue lives in :mod:`daehee_kit.verify`; the command-line
entry point is :func:`daehee_kit.cli.main`.
"""

from .algebra import RationalPolynomial, TruncatedSeries
from .bernoulli import bernoulli_number, bernoulli_poly, bernoulli_poly_at
from .combinat import (
    StirlingCache,
    binomial,
    falling_factorial_poly,
    multinomial,
    rising_factorial_poly,
    stirling1,
    stirling1_unsigned,
    stirling2,
)
from .daehee import (
    daehee1_number_closed,
    daehee1_number_gf,
    daehee1_number_multinomial,
    daehee1_number_stirling_bernoulli,
    daehee1_poly,
    daehee2_number,
    daehee2_number_gf,
    daehee2_poly,
)
from .kernels import BACKEND
from .verify import IdentityId, check_all, check_identity

__version__ = "0.1.0"
