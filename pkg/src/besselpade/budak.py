"""Budak delay approximants and their gamma analysis.

G(s) = K * B_m[2*(gamma-1)*s; 2, 1] / B_n(2*gamma*s; 2, 1),
K = B_n(0;2,1) / B_m(0;2,1), gamma > 0.

The squared magnitude has a closed double-sum form whose normalized u^j
coefficients match between numerator and denominator only at special
gamma. Equating one pair gives (gamma/(gamma-1))^(2j) = A_j with A_j an
explicit factorial ratio; no gamma can equate two pairs at once, so the
magnitude flatness order tops out at 2, attained at the roots of

    q(gamma) = 2(n-m) gamma^2 - 2(2n-1) gamma + (2n-1),

i.e. gamma = [(2n-1) +- sqrt((2n-1)(2m-1))] / (2(n-m)).

The group delay's dependence on gamma is recovered coefficient by
coefficient through exact interpolation at rational gamma samples; the
resulting integer polynomial block drives the delay-order and order-2
certificates used at irrational gamma, where no transfer function with
rational coefficients exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .core import (
    Enclosure,
    Polynomial,
    QuadSurd,
    TransferFunction,
    EvenRationalFunction,
    interpolate,
    nth_root_enclosure,
    poly_gcd,
)
from .gbp import gbp_of
from .response import FlatnessReport, Quantity, flatness, group_delay
from .stability import Verdict, routh_hurwitz

Gamma = Union[Fraction, int, str, QuadSurd]


@dataclass(frozen=True)
class BudakParams:
    """Numerator degree m, denominator degree n, shape parameter gamma."""

    m: int
    n: int
    gamma: Union[Fraction, QuadSurd]

    def __post_init__(self):
        if not isinstance(self.gamma, QuadSurd):
            object.__setattr__(self, "gamma", Fraction(self.gamma))
        if self.n < 1:
            raise ValueError("denominator degree must be at least 1")
        if not 0 <= self.m <= self.n:
            raise ValueError("numerator degree must satisfy 0 <= m <= n")
        g = self.gamma
        positive = g.compare_to_rational(0) > 0 if isinstance(g, QuadSurd) else g > 0
        if not positive:
            raise ValueError("gamma must be positive")

    def rational_gamma(self) -> Fraction:
        g = self.gamma
        if isinstance(g, QuadSurd):
            if not g.is_rational:
                raise ValueError("this operation requires a rational gamma")
            return g.a
        return g


def budak_params(m: int, n: int, gamma: Gamma) -> BudakParams:
    if isinstance(gamma, QuadSurd):
        return BudakParams(m, n, gamma)
    return BudakParams(m, n, Fraction(gamma))


def budak_tf(params: BudakParams) -> TransferFunction:
    """The canonical transfer function for rational gamma.

    At gamma = 1 or m = 0 the numerator degenerates to a constant and the
    result is the all-pole prototype of degree n.
    """
    g = params.rational_gamma()
    m, n = params.m, params.n
    bm = gbp_of(m, 2, 1)
    bn = gbp_of(n, 2, 1)
    k_const = Fraction(bn.coeff(0), bm.coeff(0))
    num = bm.scale_substitute(2 * (g - 1)) * k_const
    den = bn.scale_substitute(2 * g)
    return TransferFunction(num, den)


def budak_magnitude_closed(params: BudakParams) -> EvenRationalFunction:
    """Squared magnitude from the closed double-sum form, in u = omega^2.

    Prefactor [(2n)!/(2m)!]^2 * m!/n! on the numerator sum; numerator term
    i carries [2(gamma-1)]^(2(m-i)) at u^(m-i), denominator term k carries
    (2 gamma)^(2(n-k)) at u^(n-k).
    """
    g = params.rational_gamma()
    m, n = params.m, params.n
    pre = (
        Fraction(math.factorial(2 * n), math.factorial(2 * m)) ** 2
        * Fraction(math.factorial(m), math.factorial(n))
    )
    num = [Fraction(0)] * (m + 1)
    for i in range(m + 1):
        c = (
            math.comb(m, i)
            * Fraction(math.factorial(2 * i), math.factorial(i))
            * math.factorial(m + i)
        )
        num[m - i] = pre * c * (2 * (g - 1)) ** (2 * (m - i))
    den = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        c = (
            math.comb(n, k)
            * Fraction(math.factorial(2 * k), math.factorial(k))
            * math.factorial(n + k)
        )
        den[n - k] = c * (2 * g) ** (2 * (n - k))
    return EvenRationalFunction(Polynomial(num), Polynomial(den))


def coefficient_ratio(n: int, m: int, j: int) -> Fraction:
    """A_j: the value (gamma/(gamma-1))^(2j) must take to equate the
    normalized u^j magnitude coefficients."""
    if not 1 <= j <= m < n:
        raise ValueError("need 1 <= j <= m < n")
    f = math.factorial
    n_part = Fraction(
        f(2 * n) ** 2 * f(n - j) ** 2,
        f(n) ** 2 * f(2 * (n - j)) * f(2 * n - j),
    )
    m_part = Fraction(
        f(m) ** 2 * f(2 * (m - j)) * f(2 * m - j),
        f(2 * m) ** 2 * f(m - j) ** 2,
    )
    return n_part * m_part


@dataclass(frozen=True)
class GammaSolutions:
    """Both solutions of (gamma/(gamma-1))^(2j) = A_j.

    branch_plus is gamma = r/(r+1), branch_minus is gamma = r/(r-1) with
    r = A_j^(1/2j); enclosure widths are at most 10^-precision. For j = 1
    the pair is also carried exactly as quadratic surds.
    """

    j: int
    a_j: Fraction
    branch_plus: Enclosure
    branch_minus: Enclosure
    precision: int
    exact: Optional[tuple[QuadSurd, QuadSurd]] = None


def _branch_enclosures(a: Fraction, two_j: int, digits: int) -> tuple[Enclosure, Enclosure]:
    """Intervals for r/(r+1) and r/(r-1), r = a^(1/two_j), refined until
    the r interval is separated from 1."""
    while True:
        r = nth_root_enclosure(a, two_j, digits)
        if r.lo > 1 or r.hi < 1:
            break
        digits *= 2
    plus = Enclosure(r.lo / (r.lo + 1), r.hi / (r.hi + 1))
    # r/(r-1) is decreasing on either side of 1
    minus = Enclosure(r.hi / (r.hi - 1), r.lo / (r.lo - 1))
    return plus, minus


def gamma_candidates(n: int, m: int, j: int, precision: int = 12) -> GammaSolutions:
    """Validated numeric gamma pair for matching index j."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    a = coefficient_ratio(n, m, j)
    if a == 1:
        raise ArithmeticError("unit coefficient ratio: the minus branch has no finite solution")
    digits = precision + 4
    while True:
        plus, minus = _branch_enclosures(a, 2 * j, digits)
        bound = Fraction(1, 10**precision)
        if plus.width <= bound and minus.width <= bound:
            break
        digits *= 2
    exact = None
    if j == 1:
        # r = sqrt(A) = sqrt(p*q)/q for A = p/q; branches rationalize to
        # (A -+ sqrt(A)) / (A - 1)
        p, q = a.numerator, a.denominator
        scale = 1 / (q * (a - 1))
        exact = (
            QuadSurd(a / (a - 1), -scale, p * q),
            QuadSurd(a / (a - 1), scale, p * q),
        )
    return GammaSolutions(j, a, plus, minus, precision, exact)


@dataclass(frozen=True)
class Order2Gamma:
    """Roots of q(gamma) = 2(n-m) gamma^2 - 2(2n-1) gamma + (2n-1).

    gamma_plus takes the + sign on the radical; gamma_minus the - sign.
    They always straddle 1 (q(1) = 1 - 2m < 0 for m >= 1).
    """

    gamma_plus: QuadSurd
    gamma_minus: QuadSurd
    quadratic: Polynomial


def gamma_order2(n: int, m: int) -> Order2Gamma:
    """The two gamma values reaching magnitude flatness order 2."""
    if not 1 <= m < n:
        raise ValueError("need 1 <= m < n")
    half = Fraction(2 * n - 1, 2 * (n - m))
    spread = Fraction(1, 2 * (n - m))
    d = (2 * n - 1) * (2 * m - 1)
    quadratic = Polynomial([2 * n - 1, -2 * (2 * n - 1), 2 * (n - m)])
    return Order2Gamma(
        QuadSurd(half, spread, d),
        QuadSurd(half, -spread, d),
        quadratic,
    )


def _normalized_coeff(p: Polynomial, j: int) -> Fraction:
    return p.coeff(j) / p.coeff(0)


def magnitude_gamma_mismatch(n: int, m: int, j: int) -> Polynomial:
    """Denominator-minus-numerator u^j coefficient, both normalized to
    unit constant term, as an exact polynomial in gamma.

    Recovered by interpolating the canonical squared magnitude at integer
    gamma samples; a held-out sample and a degree cap verify the
    polynomial model. j may exceed the numerator degree m, in which case
    the numerator contributes nothing and the mismatch is the bare
    denominator coefficient.
    """
    if not (1 <= j <= n and 1 <= m < n):
        raise ValueError("need 1 <= m < n and 1 <= j <= n")
    bound = 2 * max(j, m)

    def mismatch_at(g: Fraction) -> Fraction:
        mag = budak_magnitude_closed(BudakParams(m, n, g))
        return _normalized_coeff(mag.denominator, j) - _normalized_coeff(mag.numerator, j)

    points = [(Fraction(t), mismatch_at(Fraction(t))) for t in range(1, bound + 4)]
    poly = interpolate(points)
    if poly.degree > bound:
        raise ArithmeticError("mismatch interpolation exceeded its degree bound")
    held_out = Fraction(bound + 4)
    if poly(held_out) != mismatch_at(held_out):
        raise ArithmeticError("mismatch interpolation failed the held-out check")
    return poly


@dataclass(frozen=True)
class MutualExclusionReport:
    """Certified separation of the gamma candidate sets across j."""

    n: int
    m: int
    precision: int
    candidates: tuple[GammaSolutions, ...]
    pairs_checked: tuple[tuple[int, int], ...]
    all_disjoint: bool
    all_above_half: bool


def mutual_exclusion(n: int, m: int, precision: int = 9) -> MutualExclusionReport:
    """Show no gamma equates two different coefficient pairs.

    Certifies by interval separation: every branch interval of matching
    index j is disjoint from every interval of j' != j, and every branch
    lies strictly above 1/2. Intervals are refined a few times before a
    failure is reported; the contract is that none is ever reported.
    """
    if not 1 <= m < n:
        raise ValueError("need 1 <= m < n")
    half = Fraction(1, 2)
    prec = precision
    for _ in range(5):
        cands = tuple(gamma_candidates(n, m, j, prec) for j in range(1, m + 1))
        pairs = tuple(
            (cands[i].j, cands[k].j)
            for i in range(len(cands))
            for k in range(i + 1, len(cands))
        )
        disjoint = all(
            a.disjoint_from(b)
            for i in range(len(cands))
            for k in range(i + 1, len(cands))
            for a in (cands[i].branch_plus, cands[i].branch_minus)
            for b in (cands[k].branch_plus, cands[k].branch_minus)
        )
        above = all(
            c.branch_plus.lo > half and c.branch_minus.lo > half for c in cands
        )
        if disjoint and above:
            break
        prec *= 2
    return MutualExclusionReport(n, m, precision, cands, pairs, disjoint, above)


@dataclass(frozen=True)
class DelayCoefficientPolys:
    """Group-delay coefficients as integer polynomials in gamma.

    numerator_polys[i-1] is the u^i numerator coefficient, likewise for
    the denominator; both share the constant term `scale` (the block is
    scaled jointly primitive, which pins the constant). The first pair
    coincides identically whenever m >= 2, reflecting delay flatness of
    order m.
    """

    m: int
    n: int
    numerator_polys: tuple[Polynomial, ...]
    denominator_polys: tuple[Polynomial, ...]
    scale: Fraction

    def a(self, i: int) -> Polynomial:
        if not 1 <= i <= len(self.numerator_polys):
            raise IndexError(f"numerator coefficient index {i} out of range")
        return self.numerator_polys[i - 1]

    def b(self, i: int) -> Polynomial:
        if not 1 <= i <= len(self.denominator_polys):
            raise IndexError(f"denominator coefficient index {i} out of range")
        return self.denominator_polys[i - 1]


def _joint_primitive_scale(values: list[Fraction]) -> Fraction:
    """lambda such that lambda*v are integers with overall gcd 1."""
    den_lcm = 1
    for v in values:
        den_lcm = math.lcm(den_lcm, v.denominator)
    num_gcd = 0
    for v in values:
        num_gcd = math.gcd(num_gcd, abs(v.numerator) * (den_lcm // v.denominator))
    if num_gcd == 0:
        raise ValueError("cannot scale an all-zero block")
    return Fraction(den_lcm, num_gcd)


def delay_gamma_polynomials(
    m: int,
    n: int,
    gamma_samples: Optional[Sequence[Fraction]] = None,
) -> DelayCoefficientPolys:
    """Recover the gamma dependence of every delay coefficient.

    Samples the canonical group delay at distinct rational gamma (never 0
    or 1, where the construction degenerates), normalizes each sample to
    unit constant term, interpolates coefficient-wise, then rescales the
    whole block to jointly primitive integer polynomials. Needs more than
    2(n+m) samples; at least one redundant sample must be consistent with
    the interpolated degree or the recovery is rejected.
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    bound = 2 * (n + m)
    if gamma_samples is None:
        gamma_samples = [Fraction(t) for t in range(2, bound + 5)]
    samples = [Fraction(g) for g in gamma_samples]
    if len(set(samples)) != len(samples):
        raise ValueError("duplicated gamma sample")
    if any(g in (0, 1) for g in samples):
        raise ValueError("gamma samples must avoid 0 and 1")
    if len(samples) <= bound:
        raise ValueError(f"need more than {bound} samples, got {len(samples)}")

    num_deg, den_deg = n + m - 1, n + m
    num_rows: list[list[tuple[Fraction, Fraction]]] = [[] for _ in range(num_deg)]
    den_rows: list[list[tuple[Fraction, Fraction]]] = [[] for _ in range(den_deg)]
    for g in samples:
        delay = group_delay(budak_tf(BudakParams(m, n, g)))
        for i in range(1, num_deg + 1):
            num_rows[i - 1].append((g, _normalized_coeff(delay.numerator, i)))
        for i in range(1, den_deg + 1):
            den_rows[i - 1].append((g, _normalized_coeff(delay.denominator, i)))

    def recover(points: list[tuple[Fraction, Fraction]]) -> Polynomial:
        poly = interpolate(points)
        # at least one sample beyond the polynomial degree must be redundant
        if poly.degree > len(points) - 2:
            raise ArithmeticError("delay coefficient interpolation did not stabilize")
        if poly.degree > bound:
            raise ArithmeticError("delay coefficient degree exceeds its bound")
        return poly

    num_polys = [recover(row) for row in num_rows]
    den_polys = [recover(row) for row in den_rows]

    all_coeffs: list[Fraction] = [Fraction(1)]  # the shared unit constant
    for poly in (*num_polys, *den_polys):
        all_coeffs.extend(poly.coefficients)
    lam = _joint_primitive_scale(all_coeffs)
    return DelayCoefficientPolys(
        m,
        n,
        tuple(p * lam for p in num_polys),
        tuple(p * lam for p in den_polys),
        lam,
    )


def delay_flatness_order_budak(params: BudakParams) -> FlatnessReport:
    """Flatness of the group delay; order m whenever m < n, gamma not 0 or 1."""
    if params.m < 1:
        raise ValueError("need numerator degree at least 1")
    g = params.rational_gamma()
    if g == 1:
        raise ValueError("gamma = 1 degenerates to the all-pole case")
    return flatness(group_delay(budak_tf(params)), quantity=Quantity.DELAY)


@dataclass(frozen=True)
class Order2Certificate:
    """Exact facts about the approximant at the order-2 gamma surds.

    Built entirely from rational arithmetic: divisibility of mismatch
    polynomials by the defining quadratic q, coprimality for the
    non-vanishing facts, and surd-vs-rational comparisons. Irrational
    gamma never enters a transfer function.
    """

    n: int
    m: int
    gammas: Order2Gamma
    u1_divisible_by_q: bool
    u2_coprime_to_q: bool
    magnitude_order: Optional[int]
    delay_lower_orders_match: bool
    delay_mth_coprime_to_q: bool
    delay_order: Optional[int]
    denominator_verdict: Verdict
    numerator_verdict: Verdict
    minimum_phase_plus: bool
    minimum_phase_minus: bool


def order2_certificate(n: int, m: int) -> Order2Certificate:
    """Certify magnitude order 2, delay order m, stability and phase type
    at both order-2 gamma branches."""
    gammas = gamma_order2(n, m)
    q = gammas.quadratic

    u1 = magnitude_gamma_mismatch(n, m, 1)
    u2 = magnitude_gamma_mismatch(n, m, 2)
    u1_div = q.divides(u1)
    u2_coprime = poly_gcd(q, u2).degree == 0
    magnitude_order = 2 if (u1_div and u2_coprime) else None

    block = delay_gamma_polynomials(m, n)
    lower = all(block.a(k) == block.b(k) for k in range(1, m))
    mth = block.a(m) - block.b(m)
    mth_ok = (not mth.is_zero) and poly_gcd(q, mth).degree == 0
    delay_order = m if (lower and mth_ok) else None

    # positive-scale invariance: the actual denominator is B_n(2*gamma*s)
    # with gamma > 1/2 on both branches, so its verdict equals B_n's
    den_verdict = routh_hurwitz(gbp_of(n, 2, 1)).verdict
    num_verdict = routh_hurwitz(gbp_of(m, 2, 1)).verdict

    # numerator zeros are those of B_m scaled by 2(gamma-1): left
    # half-plane iff gamma > 1, mirrored right iff gamma < 1
    plus_gt_one = gammas.gamma_plus.compare_to_rational(1) > 0
    minus_gt_one = gammas.gamma_minus.compare_to_rational(1) > 0
    min_phase_plus = plus_gt_one and num_verdict == Verdict.STRICT_HURWITZ
    min_phase_minus = minus_gt_one and num_verdict == Verdict.STRICT_HURWITZ
    return Order2Certificate(
        n,
        m,
        gammas,
        u1_div,
        u2_coprime,
        magnitude_order,
        lower,
        mth_ok,
        delay_order,
        den_verdict,
        num_verdict,
        min_phase_plus,
        min_phase_minus,
    )
