import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from quadcf.errors import InputOutOfRange, NotAnIrrational
from quadcf.surd import (
    Kind, SurdState, cf_period, classify, discriminant, floor_surd, fractional_value,
    isqrt, normalize, surd_states,
)
from oracles import numeric_cf, x_plus


@pytest.mark.parametrize("pt, delta", [((0, 2), 8), ((1, 1), 5), ((2, 3), 16)])
def test_discriminant(pt, delta):
    assert discriminant(pt) == delta


def test_discriminant_overflow():
    with pytest.raises(InputOutOfRange):
        discriminant((2**32, 2**62))
    with pytest.raises(InputOutOfRange):
        discriminant((0, 2**63))


@pytest.mark.parametrize("pt, kind", [
    ((0, -1), Kind.NONREAL),
    ((2, 3), Kind.RATIONAL),
    ((0, 2), Kind.QUADRATIC_IRRATIONAL),
    ((0, 0), Kind.NONREAL),
])
def test_classify(pt, kind):
    assert classify(pt) is kind


@pytest.mark.parametrize("pt, expected", [((2, 2), (0, 3)), ((-1, 1), (1, 1)), ((0, 2), (0, 2))])
def test_normalize(pt, expected):
    norm = normalize(pt)
    assert norm == expected
    assert discriminant(norm) == discriminant(pt)
    with mpmath.workdps(50):
        assert mpmath.frac(x_plus(*pt, 50)) == pytest.approx(mpmath.frac(x_plus(*norm, 50)), abs=1e-40)


def test_normalize_rejects_rational():
    with pytest.raises(NotAnIrrational):
        normalize((2, 3))


@pytest.mark.parametrize("n, r", [(0, 0), (8, 2), (10**6, 1000), (2**126, 2**63)])
def test_isqrt(n, r):
    assert isqrt(n) == r


@pytest.mark.parametrize("state, expected", [((0, 1, 2), 1), ((1, 2, 5), 1), ((-3, 2, 13), 0)])
def test_floor_surd_examples(state, expected):
    assert floor_surd(state) == expected


def _interval_floor(P, Q, D):
    mpmath.iv.prec = 100
    x = (mpmath.iv.mpf(P) + mpmath.iv.sqrt(mpmath.iv.mpf(D))) / Q
    lo, hi = int(mpmath.floor(x.a)), int(mpmath.floor(x.b))
    assert lo == hi, "interval straddles an integer; widen precision"
    return lo


def test_floor_surd_matches_interval_arithmetic():
    rng = random.Random(20261018)
    checked = 0
    while checked < 10_000:
        D = rng.randint(2, 10**9)
        if isqrt(D) ** 2 == D:
            continue
        P = rng.randint(-10**6, 10**6)
        Q = rng.choice([-1, 1]) * rng.randint(1, 10**5)
        assert floor_surd((P, Q, D)) == _interval_floor(P, Q, D)
        checked += 1


@pytest.mark.parametrize("pt, a0, period", [
    ((0, 2), 1, (2,)),
    ((0, 3), 1, (1, 2)),
    ((1, 1), 0, (1,)),
    ((0, 19), 4, (2, 1, 3, 1, 2, 8)),
    ((0, 7), 2, (1, 1, 1, 4)),
])
def test_cf_period_examples(pt, a0, period):
    cf = cf_period(pt)
    assert cf.a0 == a0
    assert cf.period == period
    assert cf.T == len(period)


@pytest.mark.parametrize("pt", [(0, 19), (-7, 10), (13, -39), (1, 93), (0, 94)])
def test_cf_period_matches_numeric_expansion(pt):
    cf = cf_period(pt)
    reps = 3
    numeric = numeric_cf(x_plus(*pt), reps * cf.T)
    assert numeric[0] == cf.a0
    assert numeric[1:] == list(cf.period) * reps


def test_cf_period_rejects_non_irrational():
    with pytest.raises(NotAnIrrational):
        cf_period((2, 3))
    with pytest.raises(NotAnIrrational):
        cf_period((0, -1))


def test_pure_periodicity_and_reduction_in_disc():
    # every state after a0 is reduced: value > 1 and conjugate in (-1, 0)
    R = 60
    for p in range(-R, R + 1):
        for q in range(-R, R + 1):
            if p * p + q * q > R * R or classify((p, q)) is not Kind.QUADRATIC_IRRATIONAL:
                continue
            for s in surd_states((p, q)):
                P, Q, D = s
                r = isqrt(D)
                assert Q > 0
                assert Q - P < 0 or D > (Q - P) ** 2  # (P + sqrt D)/Q > 1
                assert P <= r  # conjugate < 0
                assert P + Q > 0 and D < (P + Q) ** 2  # conjugate > -1
                assert s.value() > 1 and -1 < s.conjugate() < 0


@settings(max_examples=300, deadline=None)
@given(st.integers(-300, 300), st.integers(-300, 300))
def test_normalization_preserves_period(p, q):
    if classify((p, q)) is not Kind.QUADRATIC_IRRATIONAL:
        return
    assert cf_period((p, q)).period == cf_period(normalize((p, q))).period


@settings(max_examples=300, deadline=None)
@given(st.integers(-300, 300), st.integers(-300, 300))
def test_opposite_p_shares_period(p, q):
    if classify((p, q)) is not Kind.QUADRATIC_IRRATIONAL:
        return
    assert cf_period((p, q)).period == cf_period((-p, q)).period


@pytest.mark.parametrize("pt, prefix", [((0, 2), "0.41421356"), ((1, 1), "0.61803398"), ((2, 2), "0.73205080")])
def test_fractional_value_examples(pt, prefix):
    value = fractional_value(pt, 30)
    assert f"{float(value):.12f}".startswith(prefix)


@settings(max_examples=200, deadline=None)
@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4), st.integers(1, 120))
def test_fractional_value_error_bound(p, q, bits):
    if discriminant((p, q)) <= 0:
        return
    approx = fractional_value((p, q), bits)
    assert isinstance(approx, Fraction)
    with mpmath.workdps(80):
        exact = mpmath.frac(x_plus(p, q, 80))
        err = abs(mpmath.mpf(approx.numerator) / approx.denominator - exact)
        # a value just below an integer may wrap; distance to the circle is what matters
        err = min(err, 1 - err)
        assert err < mpmath.mpf(2) ** -bits


def test_fractional_value_exact_for_rational():
    assert fractional_value((2, 3), 10) == 0
    assert fractional_value((1, 0), 10) == 0
