"""Divisor-count sieve and the period-sum bound built on it.

For n = delta/4 the bound on the sum of period elements is

    f(n) = 2*D(n) + tau(n),                 delta = 0 (mod 4)
    f(n) = 2 * sum_{i odd, i^2 < delta} tau((delta - i^2)/4),   delta = 1 (mod 4)

with D(n) = sum_{u=1}^{isqrt(n)} tau(n - u^2).  Both cases count the triplets
(a, b, h) with a > 0 > b and h^2 - 4ab = delta.  For an odd period the
bound halves.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

import numpy as np

from .errors import InvalidDiscriminant, ResourceLimit, SieveTooSmall
from .surd import CFPeriod, discriminant, is_square


@dataclass(frozen=True)
class DivisorSieve:
    limit: int
    tau: np.ndarray  # tau[n] for 0 <= n <= limit; tau[0] is unused and set to 0

    def __getitem__(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"tau is defined for positive integers only, got {n}")
        if n > self.limit:
            raise SieveTooSmall(f"tau({n}) requested from a sieve of limit {self.limit}")
        return int(self.tau[n])


def build_sieve(limit: int) -> DivisorSieve:
    """tau(1..limit) by adding 1 at every multiple of every d."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    try:
        tau = np.zeros(limit + 1, dtype=np.int64)
        for d in range(1, limit + 1):
            tau[d::d] += 1
    except MemoryError as exc:
        raise ResourceLimit(f"cannot allocate a divisor sieve of size {limit}") from exc
    tau.flags.writeable = False
    return DivisorSieve(limit, tau)


def sieve_for_radius(radius: int) -> DivisorSieve:
    """A sieve large enough for every delta/4 with p^2 + q^2 <= radius^2."""
    return build_sieve(max(1, (radius * radius + 4 * radius) // 4 + 1))


def big_d(n: int, sieve: DivisorSieve) -> int:
    """sum of tau(n - u^2) for 1 <= u <= isqrt(n); a zero argument is skipped."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > sieve.limit:
        raise SieveTooSmall(f"D({n}) needs a sieve up to {n}, have {sieve.limit}")
    total = 0
    for u in range(1, isqrt(n) + 1):
        m = n - u * u
        if m:
            total += int(sieve.tau[m])
    return total


def big_d_table(sieve: DivisorSieve) -> np.ndarray:
    """D(n) for every 0 <= n <= sieve.limit in one pass (D(0) = 0)."""
    L = sieve.limit
    out = np.zeros(L + 1, dtype=np.int64)
    u = 1
    while u * u <= L:
        s = u * u
        # D(s + m) gets tau(m) for m >= 1
        out[s + 1:] += sieve.tau[1:L + 1 - s]
        u += 1
    return out


def f_of_discriminant(delta: int, sieve: DivisorSieve) -> int:
    if delta <= 0 or is_square(delta):
        raise InvalidDiscriminant(f"discriminant must be a positive non-square, got {delta}")
    r4 = delta % 4
    if r4 in (2, 3):
        raise InvalidDiscriminant(f"p^2 + 4q is never {r4} mod 4 (got {delta})")
    if delta // 4 > sieve.limit:
        raise SieveTooSmall(f"discriminant {delta} needs a sieve up to {delta // 4}")
    if r4 == 0:
        n = delta // 4
        return 2 * big_d(n, sieve) + sieve[n]
    total = 0
    i = 1
    while i * i < delta:
        total += int(sieve.tau[(delta - i * i) // 4])
        i += 2
    return 2 * total


class BoundCheck(NamedTuple):
    holds: bool
    lhs: int
    rhs: Fraction


def lemma3_bound(pt, cf: CFPeriod, sieve: DivisorSieve) -> BoundCheck:
    """Check sum(period) <= f(delta/4), halved when the period is odd."""
    f = f_of_discriminant(discriminant(pt), sieve)
    rhs = Fraction(f, 2) if cf.T % 2 else Fraction(f)
    lhs = sum(cf.period)
    return BoundCheck(lhs <= rhs, lhs, rhs)
