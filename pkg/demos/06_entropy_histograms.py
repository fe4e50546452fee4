"""Entropy statistics: histogram Shannon entropy and positive-exponent sums.

Newton roots from a guess sweep form the histogram input; a grid of logistic
Lyapunov exponents plays the role of an imported exponent list for the
positive-sum entropy. Writes demos/output/roots_histogram.svg.
"""

import os

import numpy as np

from lfdyn import (
    MapFamily,
    MapSpec,
    guess_sweep,
    histogram,
    lyapunov_exponent,
    pesin_entropy,
    shannon_entropy,
    unimodality_check,
)
from lfdyn._plots import save_histogram

OUT_DIR = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT_DIR, exist_ok=True)

# --- histogram + entropy of a root sweep -------------------------------------------

spec = MapSpec(MapFamily.ODD, c=0.0)
reports = guess_sweep(spec, list(np.linspace(0.5, 50.0, 200)))
roots = [rep.root for rep in reports if rep.root is not None]
hist = histogram(roots, bins=15)
raw, normalized = shannon_entropy(hist)
unimodal, center = unimodality_check(hist)
print("roots of the odd map (c = 0), 200 guesses in [0.5, 50]")
print(f"  roots found: {len(roots)}, occupied bins: {int(np.count_nonzero(hist.counts))}")
print(f"  shannon entropy: raw {raw:.6f}, normalized {normalized:.6f}")
print(f"  unimodal: {unimodal}, mode center: {center:.6f}")

path = os.path.join(OUT_DIR, "roots_histogram.svg")
save_histogram(hist, path)
print(f"  histogram written to {path}")

# --- positive-exponent sum over a logistic parameter scan ---------------------------

rs = np.linspace(3.4, 4.0, 120)
lambdas = [
    lyapunov_exponent(MapSpec(MapFamily.LOGISTIC, r=float(r)), 0.3, 20_000, 2_000).exponent
    for r in rs
]
positive = [x for x in lambdas if x > 0]
print(f"\nlogistic exponents over r in [3.4, 4.0] ({len(rs)} values)")
print(f"  positive exponents: {len(positive)}, largest {max(lambdas):+.4f}")
print(f"  positive-sum entropy of the list: {pesin_entropy(lambdas):.4f}")

# the same list written to disk round-trips through the CLI entropy reader
list_path = os.path.join(OUT_DIR, "lyapunov_list.txt")
with open(list_path, "w") as fh:
    fh.writelines(f"{x:.17g}\n" for x in lambdas)
print(f"  exponent list written to {list_path} (one real per line)")
