"""
Gauss-Kuzmin statistics of periods over a disc
==============================================

Pool all period elements of all points with p^2 + q^2 <= R^2 and compare the
frequency of each k with log2(1 + 1/(k(k+2))).  Then weight positions
geometrically inside each period and average per point instead.
"""
from quadcf import sweep, theoretical_kuzmin

for R in (50, 100, 200, 400):
    r = sweep(R, w=0.99)
    print(f"R={R:<4} |Omega|={r.omega_size:<7} mean T={float(r.t_hat):7.3f}  "
          f"A={float(r.a_mean):7.3f}  A'={float(r.a_prime):6.3f}  "
          f"pooled P(1)={r.arnold_hist[1]:.4f}  weighted P(1)={r.weighted_hist[1]:.4f}")

print(f"Gauss-Kuzmin P(1) = {theoretical_kuzmin(1):.4f}")

###############################################################################
# The pooled estimator sits on the Gauss-Kuzmin value already at R = 50.  The
# per-point average approaches it much more slowly: with w close to 1 it gives
# every point equal say, and short periods carry large elements.

r = sweep(200, w=0.5)
print("\n   k   pooled  w=0.5    theory")
for k in range(1, 9):
    print(f"{k:>4} {r.arnold_hist[k]:8.4f} {r.weighted_hist[k]:7.4f} {theoretical_kuzmin(k):9.4f}")
