"""Pade approximants of the unit delay e^(-s).

Two independent constructions of the same canonical rational function:

* `pade_exp` from the explicit factorial sums
      Q_nm(s) = (n!/(n+m)!) sum_{k=0}^{m} C(m,k) ((n+k)!/n!) (-s)^(m-k)
      P_nm(s) = (m!/(n+m)!) sum_{k=0}^{n} C(n,k) ((m+k)!/m!) s^(n-k)
* `pade_via_gbp` from generalized Bessel polynomials
      numerator   (n!/(n+m)!) * B_m(-s; n-m+2, 1)
      denominator (m!/(n+m)!) * B_n( s; m-n+2, 1)

The numerator degree is m, so the Bessel factor in it is B_m (a published
statement of this correspondence prints the degree index as n; that form
has the wrong degree and is rejected by the explicit-sum cross-check).

The defining property: the Maclaurin expansion of Q_nm - e^(-s) P_nm first
deviates from zero at the s^(n+m+1) term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Polynomial,
    TransferFunction,
    TruncatedSeries,
    exp_series,
)
from .gbp import gbp_of


@dataclass(frozen=True)
class PadeIndex:
    """Denominator degree n, numerator degree m."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("degrees must be non-negative")


def pade_numerator(idx: PadeIndex) -> Polynomial:
    """Q_nm before canonical reduction."""
    n, m = idx.n, idx.m
    pre = Fraction(math.factorial(n), math.factorial(n + m))
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(m + 1):
        c = math.comb(m, k) * Fraction(math.factorial(n + k), math.factorial(n))
        # (-s)^(m-k) contributes sign (-1)^(m-k) at degree m-k
        coeffs[m - k] = pre * c * (-1) ** (m - k)
    return Polynomial(coeffs)


def pade_denominator(idx: PadeIndex) -> Polynomial:
    """P_nm before canonical reduction."""
    n, m = idx.n, idx.m
    pre = Fraction(math.factorial(m), math.factorial(n + m))
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        c = math.comb(n, k) * Fraction(math.factorial(m + k), math.factorial(m))
        coeffs[n - k] = pre * c
    return Polynomial(coeffs)


def pade_exp(idx: PadeIndex) -> TransferFunction:
    """The (n,m) approximant from the explicit factorial sums."""
    return TransferFunction(pade_numerator(idx), pade_denominator(idx))


def pade_via_gbp(idx: PadeIndex) -> TransferFunction:
    """The same approximant assembled from generalized Bessel polynomials."""
    n, m = idx.n, idx.m
    delta = Fraction(n - m + 2)
    alpha = Fraction(m - n + 2)
    num = gbp_of(m, delta, 1).scale_substitute(-1)
    den = gbp_of(n, alpha, 1)
    num = num * Fraction(math.factorial(n), math.factorial(n + m))
    den = den * Fraction(math.factorial(m), math.factorial(n + m))
    return TransferFunction(num, den)


def pade_order_defect(idx: PadeIndex, terms: int) -> int:
    """Index of the first nonzero Maclaurin coefficient of Q - e^(-s) P.

    Contract: equals n + m + 1. `terms` must look far enough to see it.
    """
    if terms <= idx.n + idx.m + 1:
        raise ValueError("terms must exceed n + m + 1")
    q = TruncatedSeries.from_polynomial(pade_numerator(idx), terms)
    p = TruncatedSeries.from_polynomial(pade_denominator(idx), terms)
    defect = q - exp_series(-1, terms) * p
    first = defect.first_nonzero()
    if first is None:
        raise ArithmeticError("no deviation found within the requested terms")
    return first
