"""Group delay, magnitude and flatness tests."""

import math
import random
from fractions import Fraction as F

import pytest

import _oracles
from besselpade.core import EvenRationalFunction, Polynomial, TransferFunction
from besselpade.gbp import gbp_of
from besselpade.pade import PadeIndex, pade_exp
from besselpade.response import (
    FlatBeyondHorizon,
    Quantity,
    delay_flatness,
    flatness,
    group_delay,
    magnitude_flatness,
    magnitude_squared,
    sample,
)

rng = random.Random(90911)


def pe(n, m):
    return pade_exp(PadeIndex(n, m))


def ev(f, u):
    return f.numerator(u) / f.denominator(u)


def allpole(n):
    den = gbp_of(n, 2, 1)
    return TransferFunction(Polynomial([den.coeff(0)]), den)


def test_magnitude_squared_fixtures():
    ms = magnitude_squared(pe(3, 2))
    assert ms == EvenRationalFunction(
        Polynomial([3600, 216, 9]), Polynomial([3600, 216, 9, 1])
    )
    assert magnitude_squared(pe(1, 0)) == EvenRationalFunction(
        Polynomial([1]), Polynomial([1, 1])
    )


def test_magnitude_squared_allpass_is_constant():
    ms = magnitude_squared(pe(2, 2))
    assert ms.numerator == Polynomial([1])
    assert ms.denominator == Polynomial([1])


def test_group_delay_fixtures():
    gd = group_delay(pe(3, 2))
    assert gd == EvenRationalFunction(
        Polynomial([1440000, 172800, 12384, 592, 17]),
        Polynomial([1440000, 172800, 12384, 832, 33, 1]),
    )
    assert group_delay(pe(1, 0)) == EvenRationalFunction(
        Polynomial([1]), Polynomial([1, 1])
    )
    assert ev(gd, F(1)) == F(1625793, 1626050)


def test_group_delay_of_pure_allpass():
    # |H| = 1, delay still nontrivial
    gd = group_delay(pe(1, 1))
    assert gd == EvenRationalFunction(Polynomial([4]), Polynomial([4, 1]))


def test_group_delay_additive_over_products():
    h1, h2 = pe(2, 1), pe(3, 0)
    prod = TransferFunction(
        h1.numerator * h2.numerator, h1.denominator * h2.denominator
    )
    g1, g2, gp = group_delay(h1), group_delay(h2), group_delay(prod)
    for u in (F(0), F(1, 3), F(1), F(7, 2), F(12)):
        assert ev(gp, u) == ev(g1, u) + ev(g2, u)


def test_group_delay_rejects_zero_at_origin():
    with pytest.raises(ValueError):
        group_delay(TransferFunction(Polynomial([0, 1]), Polynomial([1, 1])))
    with pytest.raises(ValueError):
        group_delay(TransferFunction(Polynomial([1]), Polynomial([0, 1, 1])))


def test_dc_delay_is_one_for_approximants():
    for n in range(1, 11):
        for m in range(0, n):
            gd = group_delay(pe(n, m))
            assert gd.at_origin() == 1, (n, m)


def test_flatness_fixtures():
    rep = delay_flatness(pe(3, 2))
    assert rep.value_at_origin == 1
    assert rep.order == 3
    assert rep.leading_deviation == F(-1, 6000)
    assert rep.quantity is Quantity.DELAY

    rep = magnitude_flatness(pe(3, 2))
    assert rep.value_at_origin == 1
    assert rep.order == 3
    assert rep.leading_deviation == F(-1, 3600)
    assert rep.quantity is Quantity.MAGNITUDE_SQUARED


def test_flatness_constant_raises():
    with pytest.raises(FlatBeyondHorizon):
        magnitude_flatness(pe(2, 2))
    f = EvenRationalFunction(Polynomial([3]), Polynomial([1]))
    with pytest.raises(FlatBeyondHorizon):
        flatness(f)


def test_flatness_explicit_horizon():
    f = EvenRationalFunction(Polynomial([1, 0, 0, 0, 5]), Polynomial([1]))
    assert flatness(f).order == 4
    with pytest.raises(FlatBeyondHorizon):
        flatness(f, max_terms=3)


def test_delay_orders_follow_index_gap():
    # numerator degree m = n-1 gives order n; m = n-2 gives order n-1
    for n in range(2, 7):
        assert delay_flatness(pe(n, n - 1)).order == n, n
        assert delay_flatness(pe(n, n - 2)).order == n - 1, n


def test_magnitude_orders_follow_denominator_degree():
    for n in range(2, 7):
        assert magnitude_flatness(pe(n, n - 1)).order == n, n
        assert magnitude_flatness(pe(n, n - 2)).order == n, n


def test_allpole_delay_matches_classical_family():
    # maximally flat delay for the all-pole ladder
    for n in range(1, 7):
        assert delay_flatness(allpole(n)).order == n, n


def test_sample_transfer_function():
    pts = sample(pe(1, 0), [0.0, 1.0])
    assert pts[0].value == pytest.approx(1.0)
    assert not pts[0].pole_adjacent
    assert pts[1].value == pytest.approx(0.5 - 0.5j)


def test_sample_even_rational():
    ms = magnitude_squared(pe(3, 2))
    pts = sample(ms, [0.0, 1.0])
    assert isinstance(pts[0].value, float)
    assert pts[0].value == pytest.approx(1.0)
    assert pts[1].value == pytest.approx(3825.0 / 3826.0)


def test_sample_flags_poles():
    tf = TransferFunction(Polynomial([1]), Polynomial([1, 0, 1]))
    pts = sample(tf, [1.0, 2.0])
    assert pts[0].pole_adjacent and pts[0].value == math.inf
    assert not pts[1].pole_adjacent


def test_magnitude_against_complex_evaluation():
    for tf in (pe(3, 2), pe(4, 1), allpole(4)):
        ms = magnitude_squared(tf)
        for _ in range(10):
            w = rng.uniform(0.05, 4.0)
            assert ev(ms, w * w) == pytest.approx(
                _oracles.magnitude_value(tf, w), rel=1e-9
            )


def test_group_delay_against_finite_difference():
    for tf in (pe(3, 2), pe(4, 3), allpole(4)):
        gd = group_delay(tf)
        for _ in range(8):
            w = rng.uniform(0.1, 3.0)
            assert ev(gd, w * w) == pytest.approx(
                _oracles.fd_group_delay(tf, w), abs=1e-6
            )
