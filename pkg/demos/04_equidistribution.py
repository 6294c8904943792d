"""
Are the fractional parts of x+ uniformly distributed?
=====================================================

Order all points with a real root by distance from the origin and measure the
star discrepancy of the fractional parts of x+.  Points with a rational root
all have fractional part 0, and they dominate the discrepancy for moderate N.
"""
import numpy as np

from quadcf.stats import _fractional_floats, radius_ordered_points, star_discrepancy
from quadcf.surd import is_square

for N in (10**3, 10**4, 10**5, 4 * 10**5):
    pts = radius_ordered_points(N)
    deltas = pts[:, 0] ** 2 + 4 * pts[:, 1]
    frac = _fractional_floats(deltas, pts[:, 0], 60)
    rational = np.array([is_square(int(d)) for d in deltas])
    print(f"N={N:<7} D*={star_discrepancy(frac):.5f}  rational share={rational.mean():.5f}  "
          f"D* without rationals={star_discrepancy(frac[~rational]):.5f}")
