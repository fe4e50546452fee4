"""Closed-form L(1, chi) values and log-space lower bounds.

The value at s = 1 for a real primitive character mod m has a closed form in
the field invariants (h, w, and epsilon in the even case). This script
evaluates a few small moduli, checks the odd cases against direct series
summation, and shows why the lower bounds have to live in log space.
"""

import math

import numpy as np

from lfdyn import BoundInputs, LFunctionInputs, dirichlet_l_at_1, log_lower_bound, log_zero_free_bound

# --- closed forms for the classic small moduli --------------------------------

mod4 = dirichlet_l_at_1(LFunctionInputs(parity=-1, h=1, w=4, m=4))
mod3 = dirichlet_l_at_1(LFunctionInputs(parity=-1, h=1, w=6, m=3))
phi = (1 + math.sqrt(5)) / 2
mod5 = dirichlet_l_at_1(LFunctionInputs(parity=1, h=1, w=2, m=5, epsilon=phi))

print("closed forms")
print(f"  m=4 (odd):  {mod4:.10f}   pi/4        = {math.pi / 4:.10f}")
print(f"  m=3 (odd):  {mod3:.10f}   pi/(3 sqrt3) = {math.pi / (3 * math.sqrt(3)):.10f}")
print(f"  m=5 (even): {mod5:.10f}   log(phi)/sqrt5 = {math.log(phi) / math.sqrt(5):.10f}")

# --- direct series as an independent check (odd cases) ------------------------

k = np.arange(2_000_000)
series4 = np.sum((-1.0) ** (k % 2) / (2 * k + 1))
n = np.arange(1, 2_000_001)
chi3 = np.where(n % 3 == 1, 1.0, np.where(n % 3 == 2, -1.0, 0.0))
series3 = np.sum(chi3 / n)

print("\ntruncated series (2e6 terms)")
print(f"  m=4: {series4:.10f}   |closed - series| = {abs(mod4 - series4):.2e}")
print(f"  m=3: {series3:.10f}   |closed - series| = {abs(mod3 - series3):.2e}")

# --- bounds: (log D)^(-A) underflows float64 long before A = 2022 --------------

print("\nlog-space bounds, constant 1")
for modulus in (1e6, 1e100):
    bound = log_lower_bound(BoundInputs(modulus=modulus, constant=1.0, exponent=2022.0))
    zero_free = log_zero_free_bound(BoundInputs(modulus=modulus, constant=1.0, exponent=2022.0))
    print(f"  D = {modulus:>6.0e}: log lower bound = {bound:12.2f}  "
          f"(the bound itself ~ 1e{bound / math.log(10):.0f}), zero-free {zero_free:12.2f}")
