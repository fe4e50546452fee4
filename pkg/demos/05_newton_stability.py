"""Newton-Raphson fixed points and stability across a sweep of initial guesses.

With c = 0 the odd map x -> beta / sqrt(x) has fixed point beta^(2/3) with
derivative exactly -1/2 there, so every guess should land on one stable root.
The logistic map shows both basins (0 and 1 - 1/r) plus a classified unstable
root past the first period doubling.
"""

import math

from lfdyn import MapFamily, MapSpec, guess_sweep, newton_solve

# --- odd map without the power term: one stable root -----------------------------

spec = MapSpec(MapFamily.ODD, c=0.0)  # beta = pi
expected = math.pi ** (2.0 / 3.0)
print(f"odd map, c = 0: analytic fixed point beta^(2/3) = {expected:.10f}")
print(f"{'guess':>8} {'root':>16} {'iters':>5} {'f-prime':>10} {'stability':>10}")
for rep in guess_sweep(spec, [0.5, 1.0, 2.0, 5.0, 20.0, 100.0]):
    print(f"{rep.guess:8.1f} {rep.root:16.10f} {rep.iterations:5d} "
          f"{rep.derivative_at_root:10.6f} {rep.stability.value:>10}")

# --- logistic: two basins and an unstable root ------------------------------------

print("\nlogistic r = 2.5: fixed points 0 and 0.6")
for rep in guess_sweep(MapSpec(MapFamily.LOGISTIC, r=2.5), [0.1, 0.3, 0.55, 0.9]):
    if rep.failure is not None:
        print(f"  guess {rep.guess:4.2f}: {rep.failure.value} "
              f"(Newton derivative vanishes at the basin boundary)")
    else:
        print(f"  guess {rep.guess:4.2f}: root {rep.root:+.10f} ({rep.stability.value})")

rep = newton_solve(MapSpec(MapFamily.LOGISTIC, r=3.2), 0.65)
print(f"\nlogistic r = 3.2: root {rep.root:.6f}, f' = {rep.derivative_at_root:.4f} "
      f"-> {rep.stability.value} (the 2-cycle has taken over)")
print(f"  residuals per iteration: "
      + "  ".join(f"{r:.1e}" for r in rep.residual_history))
