"""Orbit iteration, escape handling, and cycle detection.

The logistic map gives predictable attractors to verify the machinery:
a fixed point at r = 2.5, a 2-cycle at r = 3.2, a 4-cycle at r = 3.5, and
no short cycle at r = 4. The inverse-square-root maps show the other side:
wild excursions over dozens of orders of magnitude, and orbits ejected when
they leave the real domain.
"""

from lfdyn import MapFamily, MapSpec, detect_cycle, iterate_orbit

# --- logistic attractors through period doubling -------------------------------

print("logistic attractors (x0 = 0.3)")
for r in (2.5, 3.2, 3.5, 4.0):
    rec = iterate_orbit(MapSpec(MapFamily.LOGISTIC, r=r), 0.3, 20_000, 19_000)
    report = detect_cycle(rec, max_period=16, tol=1e-6)
    if report.period is None:
        print(f"  r = {r}: no cycle of period <= 16 (chaotic)")
    else:
        pts = ", ".join(f"{p:.6f}" for p in report.points)
        print(f"  r = {r}: period {report.period} at [{pts}]")

# --- a violent orbit of the odd-parity map --------------------------------------

spec = MapSpec(MapFamily.ODD, c=10.5, alpha=4.0)
rec = iterate_orbit(spec, x0=4.0, n_iter=60, transient=0)
print("\nodd map with c = 10.5, alpha = 4 from x0 = 4: the power term amplifies")
print("every pass near x = 1 until the orbit leaves the real domain")
for i, x in enumerate(rec.samples):
    print(f"    n = {i + 1:3d}   x = {x:.6g}")
if rec.escape is not None:
    print(f"    escaped at step {rec.escape.step} ({rec.escape.reason.value})")

# --- escapes are data, not exceptions -------------------------------------------

pole = iterate_orbit(MapSpec(MapFamily.ODD, c=1.0, alpha=2.0), x0=1.0, n_iter=100, transient=10)
print(f"\nstarting exactly on the log pole: escape = {pole.escape.reason.value} "
      f"at step {pole.escape.step}, samples recorded = {len(pole.samples)}")
