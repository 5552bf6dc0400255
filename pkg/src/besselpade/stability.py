"""Exact Routh-Hurwitz classification.

The array is computed over rationals with no epsilon perturbation. Two
degeneracies get explicit handling:

* a full zero row is replaced by the derivative of the auxiliary
  polynomial read off the row above (covers imaginary-axis roots,
  including the origin and repeated axis pairs);
* a zero leading entry in an otherwise nonzero row is resolved by
  multiplying the input by (s + a) for a small positive integer a and
  reclassifying. The extra root at -a is in the open left half-plane, so
  the product's verdict is the input's verdict, and a strictly Hurwitz
  polynomial never produces this degeneracy in the first place, so the
  outcome is always NotHurwitz or Marginal.

Verdicts: StrictHurwitz (all roots in the open left half-plane),
Marginal (roots on the imaginary axis, none strictly right), NotHurwitz.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import Polynomial
from .gbp import GbpParams, gbp
from .pade import PadeIndex, pade_exp


class Verdict(enum.Enum):
    STRICT_HURWITZ = "StrictHurwitz"
    NOT_HURWITZ = "NotHurwitz"
    MARGINAL = "Marginal"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of one classification.

    routh_first_column is the leading column of the direct array; when a
    zero pivot interrupts it, the column is partial (ending at the zero
    entry) and sign_changes counts right-half-plane roots found by the
    (s + a) continuation instead.
    """

    verdict: Verdict
    routh_first_column: tuple[Fraction, ...]
    sign_changes: int
    degenerate_rows: tuple[int, ...]


class _ZeroPivot(Exception):
    def __init__(self, rows_so_far: list[list[Fraction]], row_index: int):
        self.rows_so_far = rows_so_far
        self.row_index = row_index


def _routh_rows(p: Polynomial) -> tuple[list[list[Fraction]], list[int]]:
    """All n+1 rows of the array, zero rows replaced in place.

    Raises _ZeroPivot on a zero leading entry in a nonzero row.
    """
    n = p.degree
    width = n // 2 + 1
    degenerate: list[int] = []

    def build_row(top_power: int, coeffs: Sequence[Fraction]) -> list[Fraction]:
        row = [Fraction(0)] * width
        for j in range(width):
            power = top_power - 2 * j
            if power < 0:
                break
            row[j] = coeffs[power] if power < len(coeffs) else Fraction(0)
        return row

    asc = list(p.coefficients)
    rows = [build_row(n, asc), build_row(n - 1, asc)]
    for i in range(1, n + 1):
        row = rows[i]
        if all(c == 0 for c in row):
            degenerate.append(i)
            above = rows[i - 1]
            # derivative of the auxiliary polynomial of the row above:
            # entry j sits at power (n - i) - 2j
            rows[i] = [(n - i + 1 - 2 * j) * above[j] for j in range(width)]
            row = rows[i]
        if row[0] == 0:
            raise _ZeroPivot(rows[: i + 1], i)
        if i == n:
            break
        prev, prev2 = rows[i], rows[i - 1]
        pivot = prev[0]
        nxt = [
            (pivot * prev2[j + 1] - prev2[0] * prev[j + 1]) / pivot
            if j + 1 < width
            else Fraction(0)
            for j in range(width)
        ]
        rows.append(nxt)
    return rows, degenerate


def _sign_changes(column: Sequence[Fraction]) -> int:
    changes = 0
    for a, b in zip(column, column[1:]):
        if (a > 0) != (b > 0):
            changes += 1
    return changes


def routh_hurwitz(p: Polynomial) -> StabilityReport:
    """Classify a polynomial of degree >= 1."""
    if p.is_zero or p.degree < 1:
        raise ValueError("need a nonzero polynomial of degree at least 1")
    if p.leading < 0:
        p = p * Fraction(-1)
    try:
        rows, degenerate = _routh_rows(p)
    except _ZeroPivot as zp:
        return _classify_after_pivot(p, zp)
    column = tuple(r[0] for r in rows)
    changes = _sign_changes(column)
    if changes > 0:
        verdict = Verdict.NOT_HURWITZ
    elif degenerate:
        verdict = Verdict.MARGINAL
    else:
        verdict = Verdict.STRICT_HURWITZ
    return StabilityReport(verdict, column, changes, tuple(degenerate))


def _classify_after_pivot(p: Polynomial, zp: _ZeroPivot) -> StabilityReport:
    """Resolve a zero-pivot degeneracy through the (s + a) product."""
    partial = tuple(r[0] for r in zp.rows_so_far)
    for a in range(1, 51):
        shifted = p * Polynomial([a, 1])
        try:
            rows, _ = _routh_rows(shifted)
        except _ZeroPivot:
            continue
        changes = _sign_changes([r[0] for r in rows])
        verdict = Verdict.NOT_HURWITZ if changes > 0 else Verdict.MARGINAL
        return StabilityReport(verdict, partial, changes, (zp.row_index,))
    raise ArithmeticError("zero-pivot continuation failed for 50 shift factors")


@dataclass(frozen=True)
class Theorem1Report:
    """Grid sweep outcome; the contract is an empty violation list."""

    checked: int
    violations: tuple[tuple[int, Fraction, Fraction, Verdict], ...] = field(
        default_factory=tuple
    )

    @property
    def ok(self) -> bool:
        return not self.violations


def theorem1_grid(
    n_max: int,
    alphas: Sequence[Fraction | int],
    betas: Sequence[Fraction | int],
) -> Theorem1Report:
    """Sweep the Hurwitz guarantee for alpha >= 0, beta > 0.

    Every grid point with alpha > 0, or alpha = 0 with n >= 2, must come
    out StrictHurwitz. The boundary point (n = 1, alpha = 0) yields the
    bare monomial s and is allowed Marginal, never NotHurwitz.
    """
    alphas = [Fraction(a) for a in alphas]
    betas = [Fraction(b) for b in betas]
    if any(a < 0 for a in alphas):
        raise ValueError("alpha grid must be non-negative")
    if any(b <= 0 for b in betas):
        raise ValueError("beta grid must be positive")
    violations: list[tuple[int, Fraction, Fraction, Verdict]] = []
    checked = 0
    for n in range(1, n_max + 1):
        for alpha in alphas:
            for beta in betas:
                verdict = routh_hurwitz(gbp(GbpParams(n, alpha, beta))).verdict
                checked += 1
                if alpha == 0 and n == 1:
                    if verdict == Verdict.NOT_HURWITZ:
                        violations.append((n, alpha, beta, verdict))
                elif verdict != Verdict.STRICT_HURWITZ:
                    violations.append((n, alpha, beta, verdict))
    return Theorem1Report(checked, tuple(violations))


def pade_stability(idx: PadeIndex) -> StabilityReport:
    """Classify the canonical denominator of the (n,m) delay approximant."""
    if idx.n < 1:
        raise ValueError("need denominator degree at least 1")
    return routh_hurwitz(pade_exp(idx).denominator)
