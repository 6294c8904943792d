"""
Periods two ways: surd recurrence and the river of a quadratic form
===================================================================

The root x+ of x^2 + p x = q has a purely periodic fractional part.  We
compute its period with the classical reduced-surd recurrence and then again
by walking the river of v^2 + p v u - q u^2, and check that they agree.
"""
from quadcf import cf_period, cycle_to_period, normalize, river_cycle, river_step, RiverState
from quadcf.topograph import polyline

###############################################################################
# The river for sqrt(2): starting from the edge (a, b, h) = (1, -1, 2) the
# arithmetic progression rule produces the table below and closes after four
# steps.

s = RiverState(1, -1, 2)
print("step   a   b   h   side")
for step in range(5):
    nxt, side = river_step(s)
    print(f"{step:>4} {s.a:>3} {s.b:>3} {s.h:>3}   {side.value}")
    s = nxt

###############################################################################
# The same lattice points appear in the gradual sail construction (mediant
# insertion).  A new polyline segment starts whenever the side changes.

pl = polyline((0, 2), 8)
for pt, side, seg in zip(pl.points, pl.sides, pl.segments):
    print(f"  {pt}  {side.value:<5}  segment {seg}")

###############################################################################
# Now a handful of points.  Odd periods show up twice in the river runs.

for pt in [(0, 2), (0, 3), (1, 1), (0, 19), (-7, 10), (4, 93)]:
    cf = cf_period(pt)
    rc = river_cycle(normalize(pt))
    verdict = cycle_to_period(rc, cf)
    print(f"{str(pt):>9}  a0={cf.a0:<3} period={cf.period}  T={cf.T:<3} "
          f"runs={rc.runs}  {verdict.message}")
