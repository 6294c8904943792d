"""River of the indefinite form Q(u, v) = v^2 + p*v*u - q*u^2.

Each edge of the river separates a positive face value ``a`` from a negative
face value ``b``.  Crossing to the next edge uses the arithmetic progression
rule: the two faces ahead and behind the edge, together with a + b, are in
arithmetic progression with difference ``h``, and h^2 - 4ab is the
discriminant on every edge.  Walking the river until the starting edge comes
back gives one full period of the continued fraction of x+ (twice over when
that period has odd length).
"""
from __future__ import annotations

import enum
from math import isqrt
from typing import NamedTuple

from .errors import CycleOverflow, DegenerateForm, NotNormalized
from .surd import DEFAULT_PERIOD_CAP, CFPeriod, _require_irrational, is_square


class Side(enum.Enum):
    ABOVE = "above"
    BELOW = "below"


class RiverState(NamedTuple):
    a: int
    b: int
    h: int

    @property
    def discriminant(self) -> int:
        return self.h * self.h - 4 * self.a * self.b


class RiverCycle(NamedTuple):
    states: tuple[RiverState, ...]
    sides: tuple[Side, ...]
    runs: tuple[int, ...]

    @property
    def n1(self) -> int:
        return len(self.states)


class Polyline(NamedTuple):
    points: tuple[tuple[int, int], ...]
    sides: tuple[Side, ...]

    @property
    def segments(self) -> tuple[int, ...]:
        """Index of the polyline segment each point sits on.

        A new segment starts whenever the side of the line changes.
        """
        out = []
        seg = 0
        for i, side in enumerate(self.sides):
            if i and side is not self.sides[i - 1]:
                seg += 1
            out.append(seg)
        return tuple(out)


class PeriodComparison(NamedTuple):
    match: bool
    runs: tuple[int, ...]
    expected: tuple[int, ...]
    message: str

    def __bool__(self) -> bool:
        return self.match


def form_value(pt, u: int, v: int) -> int:
    p, q = pt
    return v * v + p * v * u - q * u * u


def initial_river_state(pt) -> RiverState:
    """Edge between the faces of (0, 1) and (1, 0): (1, -q, p)."""
    _require_irrational(pt)
    p, q = pt
    if p not in (0, 1):
        raise NotNormalized(f"point {tuple(pt)} must have p in {{0, 1}}; use surd.normalize")
    return RiverState(1, -q, p)


def river_step(s: RiverState) -> tuple[RiverState, Side]:
    a, b, h = s
    c = a + b + h
    if c > 0:
        return RiverState(c, b, h + 2 * b), Side.ABOVE
    if c < 0:
        return RiverState(a, c, h + 2 * a), Side.BELOW
    raise DegenerateForm(f"zero face value after {s}; discriminant {s.discriminant} is a square")


def cyclic_runs(sides) -> tuple[int, ...]:
    """Run lengths of a cyclic sequence, merging the run that wraps around."""
    n = len(sides)
    if n == 0:
        return ()
    # rotate so the sequence starts at a run boundary
    start = next((i for i in range(n) if sides[i] is not sides[i - 1]), None)
    if start is None:
        return (n,)
    rotated = list(sides[start:]) + list(sides[:start])
    runs = []
    count = 1
    for prev, cur in zip(rotated, rotated[1:]):
        if cur is prev:
            count += 1
        else:
            runs.append(count)
            count = 1
    runs.append(count)
    return tuple(runs)


def river_cycle(pt, cap: int = DEFAULT_PERIOD_CAP) -> RiverCycle:
    start = initial_river_state(pt)
    states = [start]
    sides = []
    s = start
    while True:
        s, side = river_step(s)
        sides.append(side)
        if s == start:
            break
        if len(states) >= cap:
            raise CycleOverflow(f"river of {tuple(pt)} did not close within {cap} steps")
        states.append(s)
    return RiverCycle(tuple(states), tuple(sides), cyclic_runs(sides))


def _is_rotation(xs, ys) -> bool:
    if len(xs) != len(ys):
        return False
    if not xs:
        return True
    doubled = list(ys) + list(ys)
    n = len(xs)
    xs = list(xs)
    return any(doubled[i:i + n] == xs for i in range(n))


def cycle_to_period(rc: RiverCycle, cf: CFPeriod) -> PeriodComparison:
    """Compare river run lengths with the CF period, up to rotation.

    An odd period is doubled first, since the river only closes after an even
    number of side changes.
    """
    expected = tuple(cf.period) if cf.T % 2 == 0 else tuple(cf.period) * 2
    if _is_rotation(rc.runs, expected):
        return PeriodComparison(True, rc.runs, expected, "match")
    return PeriodComparison(
        False, rc.runs, expected, f"runs {rc.runs} are not a rotation of {expected}"
    )


def _tau_trial(m: int) -> int:
    count = 0
    d = 1
    while d * d <= m:
        if m % d == 0:
            count += 1 if d * d == m else 2
        d += 1
    return count


def enumerate_river_triplets(delta: int):
    """Yield every (a, b, h) with a > 0 > b and h^2 - 4ab = delta."""
    if delta <= 0 or is_square(delta):
        raise ValueError(f"discriminant must be a positive non-square, got {delta}")
    r = isqrt(delta)
    for h in range(-r, r + 1):
        rem = delta - h * h
        if rem % 4:
            continue
        m = rem // 4
        d = 1
        while d * d <= m:
            if m % d == 0:
                yield RiverState(d, -(m // d), h)
                if d * d != m:
                    yield RiverState(m // d, -d, h)
            d += 1


def count_river_triplets(delta: int) -> int:
    """Number of integer triplets (a, b, h), a > 0 > b, with h^2 - 4ab = delta.

    Divisors are counted by trial division, independently of the sieve in
    :mod:`quadcf.divisors`.
    """
    if delta <= 0 or is_square(delta):
        raise ValueError(f"discriminant must be a positive non-square, got {delta}")
    r = isqrt(delta)
    total = 0
    for h in range(-r, r + 1):
        rem = delta - h * h
        if rem % 4 == 0:
            total += _tau_trial(rem // 4)
    return total


def polyline(pt, steps: int) -> Polyline:
    """First ``steps`` lattice points of the gradual sail construction for x+.

    This is mediant insertion on (0/1, 1/0) with the fraction v/u drawn as the
    point (u, v).  The side of each point is decided exactly by the sign of
    the quadratic form.
    """
    _require_irrational(pt)
    p, q = pt
    if q <= 0:
        # x+ > 0 iff the product of the roots, -q, is negative
        raise ValueError(f"x+ of {tuple(pt)} is not positive")
    if steps < 1:
        raise ValueError("steps must be positive")
    lo = (1, 0)  # (u, v) for 0/1
    hi = (0, 1)  # (u, v) for 1/0
    points = []
    sides = []
    for _ in range(steps):
        u, v = lo[0] + hi[0], lo[1] + hi[1]
        points.append((u, v))
        if form_value(pt, u, v) > 0:
            sides.append(Side.ABOVE)
            hi = (u, v)
        else:
            sides.append(Side.BELOW)
            lo = (u, v)
    return Polyline(tuple(points), tuple(sides))
