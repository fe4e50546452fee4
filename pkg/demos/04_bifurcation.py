"""Bifurcation diagrams: attractor samples and branch counts along a parameter.

The logistic r-sweep shows the classic period-doubling cascade with the first
doubling at r = 3. The odd-parity map is swept in alpha at small c, where the
attractor stays a fixed point until orbits start escaping. Writes
demos/output/bifurcation_logistic.svg.
"""

import os

import numpy as np

from lfdyn import MapFamily, MapSpec, bifurcation_diagram
from lfdyn._plots import save_bifurcation_scatter

OUT_DIR = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT_DIR, exist_ok=True)

# --- logistic cascade ------------------------------------------------------------

data = bifurcation_diagram(
    MapSpec(MapFamily.LOGISTIC, r=3.0),
    param="r",
    param_range=(2.6, 3.6, 101),
    x0=0.3,
    workers=os.cpu_count() or 1,
)
counts = data.branch_counts
print("logistic branch counts along r")
for target in (1, 2, 4):
    idx = int(np.argmax(counts >= target))
    print(f"  first r with >= {target} branches: {data.param_values[idx]:.3f}")

path = os.path.join(OUT_DIR, "bifurcation_logistic.svg")
save_bifurcation_scatter(data, path)
print(f"  scatter written to {path}")

# --- odd-parity map along alpha ----------------------------------------------------

odd = bifurcation_diagram(
    MapSpec(MapFamily.ODD, c=0.007),
    param="alpha",
    param_range=(0.0, 12.0, 25),
    x0=0.4,
    n_iter=20_000,
    transient=2_000,
)
print("\nodd map (c = 0.007) branch counts along alpha")
print("  alpha:", "  ".join(f"{v:4.1f}" for v in odd.param_values[::4]))
print("  count:", "  ".join(f"{c:4d}" for c in odd.branch_counts[::4]))
escaped = int(np.count_nonzero(odd.branch_counts == 0))
print(f"  escaped parameter values: {escaped}/{len(odd.param_values)}")
