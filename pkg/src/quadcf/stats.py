"""Statistics of continued-fraction periods over integer points in a disc.

Omega_R is the set of (p, q) with p^2 + q^2 <= R^2 whose root x+ is a
quadratic irrational.  The fractional part of x+ (hence its whole period)
depends only on the discriminant p^2 + 4q, so a sweep groups points by
discriminant, expands each distinct discriminant once and weights by
multiplicity.

The "random choice" estimators are computed as exact expectations, so no
random numbers are drawn anywhere and results are reproducible bit for bit.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import numpy as np

from .errors import EmptyOmega, InputOutOfRange, InvalidWeight
from .surd import MAX_RADIUS, fractional_scaled, period_of_discriminant

DEFAULT_KCAP = 100
DEFAULT_PRECISION = 60
CHUNK = 2048  # discriminants per work unit; fixed so results ignore worker count


# ---------------------------------------------------------------------------
# enumeration

def _check_radius(R: int) -> None:
    if R < 0 or R > MAX_RADIUS:
        raise InputOutOfRange(f"radius must lie in [0, {MAX_RADIUS}], got {R}")


def disc_points(R: int) -> np.ndarray:
    """All integer (p, q) with p^2 + q^2 <= R^2, p ascending then q ascending."""
    _check_radius(R)
    p = np.arange(-R, R + 1, dtype=np.int64)
    qmax = np.array([isqrt(R * R - int(x) * int(x)) for x in p], dtype=np.int64)
    lengths = 2 * qmax + 1
    ps = np.repeat(p, lengths)
    offsets = np.repeat(np.cumsum(lengths) - lengths, lengths)
    qs = np.arange(ps.size, dtype=np.int64) - offsets - np.repeat(qmax, lengths)
    return np.stack([ps, qs], axis=1)


def _is_square_array(n: np.ndarray) -> np.ndarray:
    """Exact perfect-square test for nonnegative int64 values."""
    r = np.floor(np.sqrt(n.astype(np.float64))).astype(np.int64)
    r -= (r * r > n)
    r += ((r + 1) * (r + 1) <= n)
    return r * r == n


@dataclass(frozen=True)
class OmegaEnumeration:
    radius: int
    points: np.ndarray  # shape (n, 2), rows (p, q)
    scanned: int
    nonreal: int
    rational: int

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        for p, q in self.points:
            yield int(p), int(q)

    @property
    def discriminants(self) -> np.ndarray:
        return self.points[:, 0] ** 2 + 4 * self.points[:, 1]


def enumerate_omega(R: int) -> OmegaEnumeration:
    pts = disc_points(R)
    delta = pts[:, 0] ** 2 + 4 * pts[:, 1]
    real = delta > 0
    square = np.zeros_like(real)
    square[real] = _is_square_array(delta[real])
    keep = real & ~square
    return OmegaEnumeration(
        radius=R,
        points=pts[keep],
        scanned=len(pts),
        nonreal=int((~real).sum()),
        rational=int(square.sum()),
    )


def discriminant_counts(R: int) -> tuple[np.ndarray, np.ndarray]:
    """Distinct discriminants of Omega_R (ascending) and how many points share each."""
    return np.unique(enumerate_omega(R).discriminants, return_counts=True)


# ---------------------------------------------------------------------------
# histograms

def theoretical_kuzmin(k: int) -> float:
    """Gauss-Kuzmin mass log2(1 + 1/(k(k+2)))."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return math.log1p(1.0 / (k * (k + 2))) / math.log(2)


def theoretical_kuzmin_tail(k_cap: int) -> float:
    """Gauss-Kuzmin mass of all k > k_cap (the product telescopes)."""
    return math.log1p(1.0 / (k_cap + 1)) / math.log(2)


@dataclass(frozen=True)
class KuzminHistogram:
    """Frequencies of k = 1..k_cap, with everything above k_cap in ``overflow``."""

    k_cap: int
    mass: tuple[float, ...]
    overflow: float

    def __getitem__(self, k: int) -> float:
        if k < 1:
            raise KeyError(k)
        return self.mass[k - 1] if k <= self.k_cap else 0.0

    def total(self) -> float:
        return math.fsum(self.mass) + self.overflow

    def as_array(self) -> np.ndarray:
        """Masses for k = 1..k_cap followed by the overflow bucket."""
        return np.array(self.mass + (self.overflow,))

    @classmethod
    def from_bins(cls, bins, k_cap: int) -> "KuzminHistogram":
        # bins[0] unused, bins[1..k_cap] per k, bins[k_cap + 1] overflow
        bins = np.asarray(bins, dtype=np.float64)
        total = bins[1:].sum()
        if total <= 0:
            raise EmptyOmega("histogram has no mass")
        norm = bins / total
        return cls(k_cap, tuple(float(x) for x in norm[1:k_cap + 1]), float(norm[k_cap + 1]))


def _check_weight(w: float) -> None:
    if not 0.0 < w < 1.0:
        raise InvalidWeight(f"w must lie strictly between 0 and 1, got {w}")


def position_weights(T: int, w: float) -> np.ndarray:
    """w^(i-1) (1-w) / (1-w^T) for i = 1..T: geometric weighting of the
    infinite periodic expansion folded onto one period."""
    _check_weight(w)
    logw = math.log(w)
    i = np.arange(T, dtype=np.float64)
    return np.exp(i * logw) * (math.expm1(logw) / math.expm1(T * logw))


def weighted_distribution(period, w: float, k_cap: int = DEFAULT_KCAP) -> np.ndarray:
    """Per-point distribution of the chosen element: bins 0..k_cap+1 as in
    :meth:`KuzminHistogram.from_bins`."""
    ks = np.minimum(np.asarray(period, dtype=np.int64), k_cap + 1)
    return np.bincount(ks, weights=position_weights(len(period), w), minlength=k_cap + 2)


# ---------------------------------------------------------------------------
# sweep machinery

@dataclass
class _Partial:
    omega: int = 0
    total_T: int = 0
    total_sum: int = 0
    a_hat_by_T: dict = field(default_factory=dict)  # T -> sum of count * element sum
    arnold: np.ndarray = None
    weighted: np.ndarray = None

    def merge(self, other: "_Partial") -> None:
        self.omega += other.omega
        self.total_T += other.total_T
        self.total_sum += other.total_sum
        for T, s in other.a_hat_by_T.items():
            self.a_hat_by_T[T] = self.a_hat_by_T.get(T, 0) + s
        self.arnold += other.arnold
        self.weighted += other.weighted


def _chunk_partial(args) -> _Partial:
    deltas, counts, w, k_cap = args
    part = _Partial(arnold=np.zeros(k_cap + 2, dtype=np.int64),
                    weighted=np.zeros(k_cap + 2, dtype=np.float64))
    for delta, c in zip(deltas, counts):
        delta, c = int(delta), int(c)
        period = period_of_discriminant(delta)
        T = len(period)
        S = sum(period)
        part.omega += c
        part.total_T += c * T
        part.total_sum += c * S
        part.a_hat_by_T[T] = part.a_hat_by_T.get(T, 0) + c * S
        ks = np.minimum(np.asarray(period, dtype=np.int64), k_cap + 1)
        part.arnold += c * np.bincount(ks, minlength=k_cap + 2)
        if w is not None:
            part.weighted += c * weighted_distribution(period, w, k_cap)
    return part


def _accumulate(R: int, w: float | None, k_cap: int, workers: int = 1) -> _Partial:
    if w is not None:
        _check_weight(w)
    if k_cap < 1:
        raise ValueError("k_cap must be >= 1")
    deltas, counts = discriminant_counts(R)
    if len(deltas) == 0:
        raise EmptyOmega(f"Omega_{R} is empty")
    jobs = [(deltas[i:i + CHUNK], counts[i:i + CHUNK], w, k_cap)
            for i in range(0, len(deltas), CHUNK)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_chunk_partial, jobs))
    else:
        parts = [_chunk_partial(job) for job in jobs]
    # reduce in chunk order so float sums do not depend on the worker count
    total = parts[0]
    for part in parts[1:]:
        total.merge(part)
    return total


def _a_mean(part: _Partial) -> Fraction:
    return sum((Fraction(s, T) for T, s in sorted(part.a_hat_by_T.items())), Fraction(0)) / part.omega


def mean_period(R: int) -> Fraction:
    """Exact mean period length over Omega_R."""
    part = _accumulate(R, None, DEFAULT_KCAP)
    return Fraction(part.total_T, part.omega)


def mean_a_hat(R: int) -> Fraction:
    """Mean over Omega_R of the average period element of each point."""
    return _a_mean(_accumulate(R, None, DEFAULT_KCAP))


def a_prime(R: int) -> Fraction:
    """Sum of all period elements over Omega_R divided by the sum of all periods."""
    part = _accumulate(R, None, DEFAULT_KCAP)
    return Fraction(part.total_sum, part.total_T)


def mean_period_sqrt(Q: int) -> Fraction:
    """Mean period of the continued fraction of sqrt(q) for q = 1..Q.

    Perfect squares count as period 0 but still count in the denominator Q.
    """
    if Q < 1:
        raise ValueError("Q must be >= 1")
    total = 0
    for q in range(1, Q + 1):
        if isqrt(q) ** 2 != q:
            total += len(period_of_discriminant(4 * q))
    return Fraction(total, Q)


def kuzmin_arnold(R: int, k_cap: int = DEFAULT_KCAP) -> KuzminHistogram:
    """Frequencies of k among the pooled period elements of all of Omega_R."""
    return KuzminHistogram.from_bins(_accumulate(R, None, k_cap).arnold, k_cap)


def kuzmin_weighted(R: int, w: float, k_cap: int = DEFAULT_KCAP) -> KuzminHistogram:
    """Geometric position weighting within each period, then a uniform average
    over the points of Omega_R."""
    return KuzminHistogram.from_bins(_accumulate(R, w, k_cap).weighted, k_cap)


# ---------------------------------------------------------------------------
# equidistribution

def star_discrepancy(values, counts=None) -> float:
    """Star discrepancy of a sample in [0, 1).

    ``counts`` optionally gives a multiplicity per value.  Ties are handled by
    grouping equal values.
    """
    x = np.asarray(values, dtype=np.float64)
    c = np.ones(x.size, dtype=np.int64) if counts is None else np.asarray(counts, dtype=np.int64)
    if x.size == 0:
        raise ValueError("empty sample")
    order = np.argsort(x, kind="stable")
    x, c = x[order], c[order]
    ux, idx = np.unique(x, return_index=True)
    uc = np.add.reduceat(c, idx)
    n = uc.sum()
    after = np.cumsum(uc) / n
    before = after - uc / n
    return float(max((after - ux).max(), (ux - before).max()))


def radius_ordered_points(N: int) -> np.ndarray:
    """First N points with p^2 + 4q > 0, by distance from the origin, ties by (p, q)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    R = isqrt(N) + 2
    while True:
        pts = disc_points(R)
        pts = pts[pts[:, 0] ** 2 + 4 * pts[:, 1] > 0]
        if len(pts) >= N:
            break
        R *= 2
    r2 = pts[:, 0] ** 2 + pts[:, 1] ** 2
    order = np.lexsort((pts[:, 1], pts[:, 0], r2))
    return pts[order[:N]]


def _fractional_floats(deltas, ps, precision: int) -> np.ndarray:
    scale = 1 << (precision + 1)
    return np.array([fractional_scaled(int(d), int(p), precision) / scale
                     for d, p in zip(deltas, ps)], dtype=np.float64)


def equidistribution_discrepancy(N: int, precision: int = DEFAULT_PRECISION) -> float:
    """Star discrepancy of the fractional parts of x+ over the first N points
    (rational roots included) in order of distance from the origin."""
    pts = radius_ordered_points(N)
    deltas = pts[:, 0] ** 2 + 4 * pts[:, 1]
    return star_discrepancy(_fractional_floats(deltas, pts[:, 0], precision))


# ---------------------------------------------------------------------------
# one-pass report

@dataclass(frozen=True)
class SweepReport:
    radius: int
    omega_size: int
    t_hat: Fraction
    a_mean: Fraction
    a_prime: Fraction
    w: float
    arnold_hist: KuzminHistogram
    weighted_hist: KuzminHistogram
    discrepancy: float
    runtime: float = field(default=0.0, compare=False)


def sweep(R: int, w: float = 0.5, k_cap: int = DEFAULT_KCAP, workers: int = 1,
          precision: int = DEFAULT_PRECISION) -> SweepReport:
    """All Omega_R statistics from a single enumeration.

    ``discrepancy`` is the star discrepancy of {x+} over the points of Omega_R.
    The result does not depend on ``workers``.
    """
    t0 = time.perf_counter()
    part = _accumulate(R, w, k_cap, workers)
    deltas, counts = discriminant_counts(R)
    # {x+} depends on delta only; p = delta mod 2 is a valid representative
    disc = star_discrepancy(_fractional_floats(deltas, deltas % 2, precision), counts)
    return SweepReport(
        radius=R,
        omega_size=part.omega,
        t_hat=Fraction(part.total_T, part.omega),
        a_mean=_a_mean(part),
        a_prime=Fraction(part.total_sum, part.total_T),
        w=w,
        arnold_hist=KuzminHistogram.from_bins(part.arnold, k_cap),
        weighted_hist=KuzminHistogram.from_bins(part.weighted, k_cap),
        discrepancy=disc,
        runtime=time.perf_counter() - t0,
    )
