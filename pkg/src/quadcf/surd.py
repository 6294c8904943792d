"""Quadratic irrationals x+(p, q) = (sqrt(p^2 + 4q) - p) / 2 and their periodic
continued fractions.

A point (p, q) stands for the equation x^2 + p*x = q.  Everything here is exact
integer arithmetic; floats never enter a partial quotient.

The expansion uses the reduced-surd recurrence on (P + sqrt(D)) / Q::

    a  = floor((P + sqrt(D)) / Q)
    P' = a*Q - P
    Q' = (D - P'^2) / Q

and detects the period by the first repeated (P, Q) pair.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from .errors import InputOutOfRange, NotAnIrrational, PeriodOverflow, PrePeriodFound

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

#: Largest sweep radius for which every intermediate fits comfortably in int64.
MAX_RADIUS = 10**5

DEFAULT_PERIOD_CAP = 10**7


class ProblemPoint(NamedTuple):
    p: int
    q: int


class Kind(enum.Enum):
    NONREAL = "nonreal"
    RATIONAL = "rational"
    QUADRATIC_IRRATIONAL = "quadratic_irrational"


class SurdState(NamedTuple):
    """The number (P + sqrt(D)) / Q."""

    P: int
    Q: int
    D: int

    def value(self) -> float:
        return (self.P + self.D**0.5) / self.Q

    def conjugate(self) -> float:
        return (self.P - self.D**0.5) / self.Q


class CFPeriod(NamedTuple):
    """Integer part of x+ and the purely periodic block of its fractional part."""

    a0: int
    period: tuple[int, ...]

    @property
    def T(self) -> int:
        return len(self.period)

    @property
    def element_sum(self) -> int:
        return sum(self.period)


def _check_int64(value: int, what: str) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise InputOutOfRange(f"{what}={value} does not fit in a signed 64-bit integer")
    return value


def discriminant(pt) -> int:
    """Return p^2 + 4q.  No sign or squareness check is made here."""
    p, q = pt
    _check_int64(p, "p")
    _check_int64(q, "q")
    return _check_int64(p * p + 4 * q, "discriminant")


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def classify(pt) -> Kind:
    delta = discriminant(pt)
    if delta <= 0:
        return Kind.NONREAL
    if is_square(delta):
        return Kind.RATIONAL
    return Kind.QUADRATIC_IRRATIONAL


def _require_irrational(pt) -> int:
    kind = classify(pt)
    if kind is not Kind.QUADRATIC_IRRATIONAL:
        raise NotAnIrrational(f"point {tuple(pt)} is {kind.value}, not a quadratic irrational")
    return discriminant(pt)


def normalize(pt) -> ProblemPoint:
    """Shift (p, q) to the representative with p in {0, 1}.

    (p, q) -> (p + 2, q - p - 1) preserves both the discriminant and the
    fractional part of x+, so the representative depends on the discriminant
    alone.
    """
    delta = _require_irrational(pt)
    p = delta % 2
    return ProblemPoint(p, (delta - p * p) // 4)


def floor_surd(s) -> int:
    """Exact floor of (P + sqrt(D)) / Q for non-square D > 0 and Q != 0."""
    P, Q, D = s
    if Q == 0:
        raise ZeroDivisionError("Q must be nonzero")
    r = isqrt(D)
    if Q > 0:
        return (P + r) // Q
    # the quotient is irrational, so ceil = floor + 1
    return -((P + r) // -Q) - 1


def _expand(P: int, Q: int, D: int, cap: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Partial quotients and states of (P + sqrt(D))/Q up to the first repeat.

    Raises PrePeriodFound unless the first repeated state is the starting one.
    """
    r = isqrt(D)
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    states: list[tuple[int, int]] = []
    while (P, Q) not in seen:
        if len(quotients) >= cap:
            raise PeriodOverflow(f"no repeat within {cap} steps for D={D}")
        seen[(P, Q)] = len(quotients)
        states.append((P, Q))
        a = (P + r) // Q if Q > 0 else -((P + r) // -Q) - 1
        quotients.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    start = seen[(P, Q)]
    if start != 0:
        raise PrePeriodFound(f"D={D}: state {(P, Q)} first seen at step {start}, expected 0")
    return quotients, states


def _after_integer_part(p: int, delta: int) -> tuple[int, int, int]:
    """Return (a0, P, Q) where (P + sqrt(delta))/Q = 1/{x+}."""
    a0 = floor_surd((-p, 2, delta))
    P = 2 * a0 + p
    return a0, P, (delta - P * P) // 2


def period_of_discriminant(delta: int, cap: int = DEFAULT_PERIOD_CAP) -> tuple[int, ...]:
    """Period of {x+(p, q)} for any point with p^2 + 4q = delta (non-square, > 0)."""
    _, P, Q = _after_integer_part(delta % 2, delta)
    return tuple(_expand(P, Q, delta, cap)[0])


def cf_period(pt, cap: int = DEFAULT_PERIOD_CAP) -> CFPeriod:
    """Continued fraction of x+(p, q): integer part and purely periodic tail.

    >>> cf_period((0, 19))
    CFPeriod(a0=4, period=(2, 1, 3, 1, 2, 8))
    """
    delta = _require_irrational(pt)
    a0, P, Q = _after_integer_part(pt[0], delta)
    quotients, _ = _expand(P, Q, delta, cap)
    return CFPeriod(a0, tuple(quotients))


def surd_states(pt, cap: int = DEFAULT_PERIOD_CAP) -> list[SurdState]:
    """The reduced states visited over one period, starting at 1/{x+}."""
    delta = _require_irrational(pt)
    _, P, Q = _after_integer_part(pt[0], delta)
    return [SurdState(P_, Q_, delta) for P_, Q_ in _expand(P, Q, delta, cap)[1]]


def fractional_scaled(delta: int, p: int, bits: int) -> int:
    """floor-ish of {x+} * 2**(bits + 1), with absolute error below one unit."""
    shift = bits + 1
    num = -p * (1 << bits) + isqrt(delta << (2 * bits))
    return num & ((1 << shift) - 1)


def fractional_value(pt, precision: int = 60) -> Fraction:
    """{x+(p, q)} to within 2**-precision, as a dyadic fraction.

    Exact when the discriminant is a perfect square.
    """
    if precision < 1:
        raise ValueError("precision must be positive")
    delta = discriminant(pt)
    if delta <= 0:
        raise NotAnIrrational(f"point {tuple(pt)} has no real root")
    return Fraction(fractional_scaled(delta, pt[0], precision), 1 << (precision + 1))
