"""Frequency-domain analysis in the variable u = omega^2.

Squared magnitude comes from the para-conjugate product P(s)P(-s) with
s^2 replaced by -u. Group delay comes from splitting each polynomial as
P(j*omega) = e(u) + j*omega*o(u) and differentiating the phase:

    psi_P(u) = [e*o + 2u*(e*o' - o*e')] / (e^2 + u*o^2)

with the delay of N/D equal to psi_D - psi_N. Both quantities are exact
even rational functions; flatness orders fall out of their Maclaurin
expansions at the origin.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .core import EvenRationalFunction, Polynomial, TransferFunction


class Quantity(enum.Enum):
    DELAY = "Delay"
    MAGNITUDE_SQUARED = "MagnitudeSquared"

    def __str__(self) -> str:
        return self.value


class FlatBeyondHorizon(ArithmeticError):
    """Deviation from the origin value has no nonzero term within the horizon."""


@dataclass(frozen=True)
class FlatnessReport:
    """Leading behavior of a quantity near omega = 0.

    The deviation f(u) - value_at_origin begins exactly with
    leading_deviation * u**order.
    """

    value_at_origin: Fraction
    order: int
    leading_deviation: Fraction
    quantity: Optional[Quantity] = None


def _para_even(p: Polynomial) -> Polynomial:
    """P(s)*P(-s) as a polynomial in u, via s^2 -> -u."""
    prod = p * p.scale_substitute(-1)
    return Polynomial(
        [prod.coeff(2 * k) * (-1) ** k for k in range(prod.degree // 2 + 1)]
    )


def magnitude_squared(tf: TransferFunction) -> EvenRationalFunction:
    """|H(j*omega)|^2 as a reduced even rational function of u."""
    return EvenRationalFunction(_para_even(tf.numerator), _para_even(tf.denominator))


def _phase_slope(p: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Numerator and denominator of psi_P(u) = d(arg P(j*omega))/d(omega)."""
    e = p.even_part().scale_substitute(-1)
    o = p.odd_part().scale_substitute(-1)
    u = Polynomial([0, 1])
    num = e * o + 2 * u * (e * o.derivative() - o * e.derivative())
    den = e * e + u * o * o
    return num, den


def group_delay(tf: TransferFunction) -> EvenRationalFunction:
    """t_d(omega) = -d(arg H(j*omega))/d(omega), exact in u."""
    if tf.numerator.coeff(0) == 0 or tf.denominator.coeff(0) == 0:
        raise ValueError("phase undefined: zero at the origin")
    dn, dd = _phase_slope(tf.denominator)
    nn, nd = _phase_slope(tf.numerator)
    return EvenRationalFunction(dn * nd - nn * dd, dd * nd)


def flatness(
    f: EvenRationalFunction,
    max_terms: Optional[int] = None,
    quantity: Optional[Quantity] = None,
) -> FlatnessReport:
    """Order and leading coefficient of the deviation from the origin value.

    Works on the exact deviation polynomial num - f(0)*den: because the
    denominator is nonzero at the origin, the ratio's Maclaurin series
    first deviates at exactly the lowest nonzero power of that polynomial,
    with coefficient (that entry)/den(0). The default horizon
    2*(deg num + deg den) + 4 always suffices for a non-constant reduced
    function.
    """
    if max_terms is None:
        max_terms = 2 * (max(f.numerator.degree, 0) + f.denominator.degree) + 4
    value = f.at_origin()
    deviation = f.numerator - value * f.denominator
    if deviation.is_zero:
        raise FlatBeyondHorizon(
            f"no deviation within {max_terms} terms: function is constant"
        )
    order = deviation.lowest_nonzero_power()
    if order >= max_terms:
        raise FlatBeyondHorizon(f"first deviation at u^{order} exceeds the horizon")
    leading = deviation.coeff(order) / f.denominator.coeff(0)
    return FlatnessReport(value, order, leading, quantity)


def delay_flatness(tf: TransferFunction) -> FlatnessReport:
    return flatness(group_delay(tf), quantity=Quantity.DELAY)


def magnitude_flatness(tf: TransferFunction) -> FlatnessReport:
    return flatness(magnitude_squared(tf), quantity=Quantity.MAGNITUDE_SQUARED)


@dataclass(frozen=True)
class SamplePoint:
    omega: float
    value: Union[float, complex]
    pole_adjacent: bool = False


def sample(
    f: Union[EvenRationalFunction, TransferFunction],
    omegas: Sequence[float],
) -> list[SamplePoint]:
    """Double-precision evaluation from the exact coefficients.

    Even rational functions are evaluated at u = omega^2; transfer
    functions yield complex H(j*omega). Points where the denominator
    magnitude drops below 1e-12 are flagged, not rejected.
    """
    out: list[SamplePoint] = []
    for omega in omegas:
        w = float(omega)
        if isinstance(f, TransferFunction):
            x: complex = 1j * w
        else:
            x = w * w
        den = complex(f.denominator(x))
        flagged = abs(den) < 1e-12
        if flagged:
            value: Union[float, complex] = math.inf
        else:
            value = complex(f.numerator(x)) / den
            if isinstance(f, EvenRationalFunction):
                value = value.real
        out.append(SamplePoint(w, value, flagged))
    return out
