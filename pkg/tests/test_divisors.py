import math
import random
from fractions import Fraction

import numpy as np
import pytest

from quadcf.divisors import (
    big_d, big_d_table, build_sieve, f_of_discriminant, lemma3_bound, sieve_for_radius,
)
from quadcf.errors import InvalidDiscriminant, SieveTooSmall
from quadcf.surd import cf_period


def tau_brute(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


@pytest.fixture(scope="module")
def sieve():
    return build_sieve(10**5)


def test_sieve_small():
    s = build_sieve(6)
    assert list(s.tau[1:]) == [1, 2, 2, 3, 2, 4]


def test_sieve_examples(sieve):
    assert sieve[12] == 6
    assert sieve[36] == 9
    assert sieve[1] == 1
    assert sieve[99991] == 2  # prime


def test_sieve_matches_trial_division():
    s = build_sieve(2000)
    assert [s[n] for n in range(1, 2001)] == [tau_brute(n) for n in range(1, 2001)]


def test_sieve_bounds(sieve):
    with pytest.raises(SieveTooSmall):
        sieve[10**5 + 1]
    with pytest.raises(ValueError):
        sieve[0]
    with pytest.raises(ValueError):
        build_sieve(0)


def test_tau_multiplicative(sieve):
    rng = random.Random(7)
    done = 0
    while done < 1000:
        m, n = rng.randint(1, 316), rng.randint(1, 316)
        if math.gcd(m, n) != 1:
            continue
        assert sieve[m * n] == sieve[m] * sieve[n]
        done += 1


@pytest.mark.parametrize("n, value", [(2, 1), (5, 4), (7, 6)])
def test_big_d_examples(sieve, n, value):
    assert big_d(n, sieve) == value


def test_big_d_skips_zero_for_squares(sieve):
    # D(4) = tau(3) only; u = 2 gives n - u^2 = 0
    assert big_d(4, sieve) == 2


def test_big_d_table_matches_pointwise():
    s = build_sieve(3000)
    table = big_d_table(s)
    assert all(table[n] == big_d(n, s) for n in range(1, 3001))


def test_big_d_sieve_too_small():
    with pytest.raises(SieveTooSmall):
        big_d(50, build_sieve(10))


@pytest.mark.parametrize("delta, value", [(8, 4), (5, 2), (28, 14)])
def test_f_examples(sieve, delta, value):
    assert f_of_discriminant(delta, sieve) == value


@pytest.mark.parametrize("delta", [6, 7, 11, 16, -5, 0])
def test_f_invalid(sieve, delta):
    with pytest.raises(InvalidDiscriminant):
        f_of_discriminant(delta, sieve)


def test_f_sieve_too_small():
    with pytest.raises(SieveTooSmall):
        f_of_discriminant(10**4 + 1, build_sieve(100))


@pytest.mark.parametrize("pt, lhs, rhs", [((0, 2), 2, 2), ((1, 1), 1, 1), ((0, 7), 7, 14)])
def test_lemma3_examples(sieve, pt, lhs, rhs):
    check = lemma3_bound(pt, cf_period(pt), sieve)
    assert check.holds
    assert check.lhs == lhs
    assert check.rhs == Fraction(rhs)


def test_sieve_for_radius_covers_disc():
    R = 37
    s = sieve_for_radius(R)
    worst = max(p * p + 4 * q for p in range(-R, R + 1) for q in range(-R, R + 1)
                if p * p + q * q <= R * R)
    assert worst // 4 <= s.limit


# max of D(n) / (sqrt(n) (1 + ln n)^3) over n <= 10^5, frozen from the first run
D_GROWTH_CONSTANT = 0.145680313338449


def test_big_d_growth(sieve):
    table = big_d_table(sieve)
    n = np.arange(1, sieve.limit + 1)
    ratio = table[1:] / (np.sqrt(n) * (1 + np.log(n)) ** 3)
    assert ratio.max() <= D_GROWTH_CONSTANT * (1 + 1e-12)
