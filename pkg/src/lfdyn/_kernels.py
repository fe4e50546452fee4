"""Jitted scalar kernels: the single numeric source of truth for map evaluation.

Every public evaluation path (eval_map, orbits, Lyapunov accumulation,
bifurcation scans) funnels through these functions, so replaying a recorded
orbit through eval_map reproduces it bit for bit, and parallel sweeps are
byte-identical to sequential ones regardless of worker count.

Escape codes are plain ints here; the maps module maps them to the Escape
enum. Kernels never raise: bad states come back as (0.0, code).
"""

import math

import numpy as np
from numba import njit

# escape codes
OK = 0
DOMAIN_VIOLATION = 1
LOG_POLE = 2
OVERFLOW = 3

# family codes
FAM_SQRT = 0
FAM_LOGISTIC = 1

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def signed_power(y, alpha):
    """Odd extension of the inverse power: sign(y) * |y| ** (-alpha).

    Defined as 0 at y = 0 (sign(0) = 0); the pole that appears there for
    alpha > 0 is handled by the callers' escape checks, not here.
    """
    if y > 0.0:
        return y ** (-alpha)
    if y < 0.0:
        return -((-y) ** (-alpha))
    return 0.0


@njit(**_JIT)
def sqrt_family_step(a, c, alpha, x, bound):
    """One step of x -> a/sqrt(x) + c * signed_power(log x, alpha).

    Returns (value, code). Escapes: x outside (0, inf) -> DOMAIN_VIOLATION,
    x == 1 with an active power term -> LOG_POLE, |value| > bound -> OVERFLOW.
    """
    if not math.isfinite(x) or x <= 0.0:
        return 0.0, DOMAIN_VIOLATION
    if x == 1.0 and alpha > 0.0 and c != 0.0:
        return 0.0, LOG_POLE
    v = a / math.sqrt(x)
    if c != 0.0:
        v = v + c * signed_power(math.log(x), alpha)
    if not (abs(v) <= bound):
        return 0.0, OVERFLOW
    return v, OK


@njit(**_JIT)
def sqrt_family_deriv(a, c, alpha, x, bound):
    """Derivative of sqrt_family_step's map: -a/(2 x^(3/2)) - c*alpha*|log x|^(-alpha-1)/x.

    Same escape semantics as the map itself. The power-term derivative is the
    uniform one of the odd extension, valid on both sides of x = 1.
    """
    if not math.isfinite(x) or x <= 0.0:
        return 0.0, DOMAIN_VIOLATION
    if x == 1.0 and alpha > 0.0 and c != 0.0:
        return 0.0, LOG_POLE
    d = -a / (2.0 * x ** 1.5)
    if c != 0.0 and alpha > 0.0:
        d = d - c * alpha * abs(math.log(x)) ** (-alpha - 1.0) / x
    if not (abs(d) <= bound):
        return 0.0, OVERFLOW
    return d, OK


@njit(**_JIT)
def logistic_step(r, x, bound):
    """One step of x -> r * x * (1 - x). Any finite x is in-domain."""
    if not math.isfinite(x):
        return 0.0, DOMAIN_VIOLATION
    v = r * x * (1.0 - x)
    if not (abs(v) <= bound):
        return 0.0, OVERFLOW
    return v, OK


@njit(**_JIT)
def logistic_deriv(r, x, bound):
    if not math.isfinite(x):
        return 0.0, DOMAIN_VIOLATION
    d = r * (1.0 - 2.0 * x)
    if not (abs(d) <= bound):
        return 0.0, OVERFLOW
    return d, OK


@njit(**_JIT)
def eval_step(fam, a, c, alpha, r, x, bound):
    if fam == FAM_LOGISTIC:
        return logistic_step(r, x, bound)
    return sqrt_family_step(a, c, alpha, x, bound)


@njit(**_JIT)
def eval_deriv(fam, a, c, alpha, r, x, bound):
    if fam == FAM_LOGISTIC:
        return logistic_deriv(r, x, bound)
    return sqrt_family_deriv(a, c, alpha, x, bound)


@njit(**_JIT)
def orbit_fill(fam, a, c, alpha, r, x0, n_iter, transient, bound, out):
    """Iterate n_iter steps from x0, writing post-transient iterates into out.

    out must hold n_iter - transient values. Returns
    (n_written, escape_code, escape_step) where escape_step is the index n at
    which computing x_{n+1} from x_n failed, or -1 if the orbit completed.
    """
    x = x0
    n_written = 0
    for n in range(n_iter):
        v, code = eval_step(fam, a, c, alpha, r, x, bound)
        if code != OK:
            return n_written, code, n
        if n >= transient:
            out[n_written] = v
            n_written += 1
        x = v
    return n_written, OK, -1


@njit(**_JIT)
def lyapunov_accumulate(fam, a, c, alpha, r, x0, n_iter, transient, bound, log_floor):
    """Average log|f'(x_n)| along the orbit, post-transient.

    Per-step terms below log_floor (including log 0 = -inf at superstable
    points) are clamped to log_floor; `clamped` reports whether that happened.
    On escape at step n the average covers whatever terms were accumulated so
    far, falling back to the pre-transient terms when the escape precedes the
    transient end, so the exponent stays finite with n_used >= 1 whenever at
    least one step succeeded.

    Returns (exponent, n_used, escape_code, escape_step, clamped).
    """
    x = x0
    post_sum = 0.0
    post_n = 0
    pre_sum = 0.0
    pre_n = 0
    clamped = False
    for n in range(n_iter):
        v, code = eval_step(fam, a, c, alpha, r, x, bound)
        d, dcode = eval_deriv(fam, a, c, alpha, r, x, bound)
        if code == OK and dcode != OK:
            code = dcode
        if code != OK:
            if post_n > 0:
                return post_sum / post_n, post_n, code, n, clamped
            if pre_n > 0:
                return pre_sum / pre_n, pre_n, code, n, clamped
            return 0.0, 0, code, n, clamped
        ad = abs(d)
        if ad > 0.0:
            term = math.log(ad)
        else:
            term = -math.inf
        if term < log_floor:
            term = log_floor
            clamped = True
        if n >= transient:
            post_sum += term
            post_n += 1
        else:
            pre_sum += term
            pre_n += 1
        x = v
    return post_sum / post_n, post_n, OK, -1, clamped


def warm_up():
    """Force compilation (or cache load) of every kernel with tiny inputs."""
    buf = np.empty(2)
    sqrt_family_step(1.0, 1.0, 2.0, 4.0, 1e100)
    sqrt_family_deriv(1.0, 1.0, 2.0, 4.0, 1e100)
    logistic_step(2.5, 0.3, 1e100)
    logistic_deriv(2.5, 0.3, 1e100)
    eval_step(FAM_SQRT, 1.0, 0.0, 0.0, 0.0, 4.0, 1e100)
    eval_deriv(FAM_SQRT, 1.0, 0.0, 0.0, 0.0, 4.0, 1e100)
    orbit_fill(FAM_LOGISTIC, 0.0, 0.0, 0.0, 2.5, 0.3, 3, 1, 1e100, buf)
    lyapunov_accumulate(FAM_LOGISTIC, 0.0, 0.0, 0.0, 2.5, 0.3, 3, 1, 1e100, -700.0)
