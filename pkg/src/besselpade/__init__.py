"""Exact-arithmetic toolkit for rational delay approximation.

Generalized Bessel polynomials, Pade approximants of e^(-s), Budak
approximants, exact Routh-Hurwitz classification, and group-delay and
magnitude flatness analysis, all over arbitrary-precision rationals.
"""

from .core import (
    Enclosure,
    EvenRationalFunction,
    Polynomial,
    QuadSurd,
    TransferFunction,
    TruncatedSeries,
    exp_series,
    interpolate,
    poly_gcd,
    poly_scale_substitute,
    series_of_ratio,
    surd_to_float,
)
from .gbp import GbpParams, classical_bessel, gbp, gbp_of, positivity_necessary
from .pade import PadeIndex, pade_exp, pade_order_defect, pade_via_gbp
from .stability import (
    StabilityReport,
    Verdict,
    pade_stability,
    routh_hurwitz,
    theorem1_grid,
)
from .response import (
    FlatBeyondHorizon,
    FlatnessReport,
    Quantity,
    delay_flatness,
    flatness,
    group_delay,
    magnitude_flatness,
    magnitude_squared,
    sample,
)
from .budak import (
    BudakParams,
    DelayCoefficientPolys,
    GammaSolutions,
    MutualExclusionReport,
    Order2Certificate,
    Order2Gamma,
    budak_magnitude_closed,
    budak_params,
    budak_tf,
    coefficient_ratio,
    delay_flatness_order_budak,
    delay_gamma_polynomials,
    gamma_candidates,
    gamma_order2,
    magnitude_gamma_mismatch,
    mutual_exclusion,
    order2_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "Enclosure",
    "EvenRationalFunction",
    "Polynomial",
    "QuadSurd",
    "TransferFunction",
    "TruncatedSeries",
    "exp_series",
    "interpolate",
    "poly_gcd",
    "poly_scale_substitute",
    "series_of_ratio",
    "surd_to_float",
    "GbpParams",
    "classical_bessel",
    "gbp",
    "gbp_of",
    "positivity_necessary",
    "PadeIndex",
    "pade_exp",
    "pade_order_defect",
    "pade_via_gbp",
    "StabilityReport",
    "Verdict",
    "pade_stability",
    "routh_hurwitz",
    "theorem1_grid",
    "FlatBeyondHorizon",
    "FlatnessReport",
    "Quantity",
    "delay_flatness",
    "flatness",
    "group_delay",
    "magnitude_flatness",
    "magnitude_squared",
    "sample",
    "BudakParams",
    "DelayCoefficientPolys",
    "GammaSolutions",
    "MutualExclusionReport",
    "Order2Certificate",
    "Order2Gamma",
    "budak_magnitude_closed",
    "budak_params",
    "budak_tf",
    "coefficient_ratio",
    "delay_flatness_order_budak",
    "delay_gamma_polynomials",
    "gamma_candidates",
    "gamma_order2",
    "magnitude_gamma_mismatch",
    "mutual_exclusion",
    "order2_certificate",
]
