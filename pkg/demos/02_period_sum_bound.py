"""
How tight is the divisor bound on period sums?
==============================================

The sum of the period elements of x+(p, q) never exceeds f(delta/4), the
number of river triplets (a, b, h) with h^2 - 4ab = delta, and odd periods
get half of that.  Here we scan a disc and look at the slack.
"""
import numpy as np

from quadcf.cli import boundcheck
from quadcf.divisors import big_d_table, build_sieve

R = 100
points, violations, slack = boundcheck(R)
print(f"radius {R}: {points} points, {violations} violations")

###############################################################################
# Slack is rhs - lhs.  A large share of points sit exactly on the bound.

ordered = sorted(slack.items())
for s, count in ordered[:12]:
    print(f"  slack {str(s):>6}: {count}")
print(f"  tight share: {slack.get(0, 0) / points:.3f}")

###############################################################################
# D(n) grows roughly like sqrt(n) times a power of log n.

sieve = build_sieve(10**5)
D = big_d_table(sieve)
for n in (10, 100, 1000, 10**4, 10**5):
    print(f"  D({n}) = {D[n]:>6}   D/sqrt(n) = {D[n] / np.sqrt(n):.3f}")
