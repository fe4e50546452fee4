"""Orbit iteration with transient handling, escape recording, and cycle detection."""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from . import _kernels
from .errors import ArgumentError
from .maps import Escape, MapSpec

__all__ = [
    "DEFAULT_X0",
    "DEFAULT_N_ITER",
    "DEFAULT_TRANSIENT",
    "EscapeEvent",
    "OrbitRecord",
    "CycleReport",
    "iterate_orbit",
    "detect_cycle",
]

DEFAULT_X0 = 0.4
DEFAULT_N_ITER = 50_000
# 10% of the run is the package-wide transient discard convention.
DEFAULT_TRANSIENT = 5_000

_ESCAPE_FROM_CODE = {
    _kernels.DOMAIN_VIOLATION: Escape.DOMAIN_VIOLATION,
    _kernels.LOG_POLE: Escape.LOG_POLE,
    _kernels.OVERFLOW: Escape.OVERFLOW,
}


@dataclass(frozen=True)
class EscapeEvent:
    """Step n at which computing x_{n+1} from x_n failed, and why."""

    step: int
    reason: Escape


@dataclass(frozen=True)
class OrbitRecord:
    """An iterated trajectory: post-transient samples plus escape metadata.

    samples[i] is x_{transient_len + 1 + i}. total_iterations counts the
    steps actually completed (equal to escape.step when the orbit escaped).
    """

    x0: float
    samples: np.ndarray
    transient_len: int
    total_iterations: int
    escape: Optional[EscapeEvent] = None


@dataclass(frozen=True)
class CycleReport:
    """Smallest detected period and the cycle points, or period None.

    points preserve orbit successor order, rotated so the smallest point
    leads; applying the map to each yields the next (cyclically) within
    tolerance.
    """

    period: Optional[int]
    points: Tuple[float, ...]
    tolerance: float


def iterate_orbit(
    spec: MapSpec,
    x0: float = DEFAULT_X0,
    n_iter: int = DEFAULT_N_ITER,
    transient: int = DEFAULT_TRANSIENT,
) -> OrbitRecord:
    """Iterate the map n_iter times from x0, recording post-transient samples.

    Stops at the first escape and records its step; samples collected before
    the escape are kept.
    """
    if not isinstance(n_iter, int) or n_iter < 1:
        raise ArgumentError(f"n_iter must be an integer >= 1, got {n_iter}")
    if not isinstance(transient, int) or not 0 <= transient < n_iter:
        raise ArgumentError(
            f"transient must satisfy 0 <= transient < n_iter, got {transient}"
        )
    if not math.isfinite(x0):
        raise ArgumentError(f"x0 must be finite, got {x0}")

    fam, a, c, alpha, r = spec.kernel_args()
    buf = np.empty(n_iter - transient, dtype=np.float64)
    n_written, code, step = _kernels.orbit_fill(
        fam, a, c, alpha, r, float(x0), n_iter, transient, spec.escape_bound, buf
    )
    samples = buf[:n_written]
    samples.flags.writeable = False
    if code == _kernels.OK:
        return OrbitRecord(float(x0), samples, transient, n_iter)
    return OrbitRecord(
        float(x0),
        samples,
        transient,
        step,
        EscapeEvent(step, _ESCAPE_FROM_CODE[code]),
    )


def detect_cycle(orbit: OrbitRecord, max_period: int = 16, tol: float = 1e-6) -> CycleReport:
    """Find the smallest period p <= max_period recurring across all samples.

    p qualifies when |x_{n+p} - x_n| < tol for every sample pair at lag p.
    """
    if not isinstance(max_period, int) or max_period < 1:
        raise ArgumentError(f"max_period must be an integer >= 1, got {max_period}")
    if not tol > 0.0:
        raise ArgumentError(f"tol must be positive, got {tol}")
    s = np.asarray(orbit.samples)
    if len(s) < 2 * max_period:
        raise ArgumentError(
            f"need at least 2 * max_period = {2 * max_period} samples, got {len(s)}"
        )
    for p in range(1, max_period + 1):
        if np.all(np.abs(s[p:] - s[:-p]) < tol):
            window = s[-p:]
            k = int(np.argmin(window))
            points = tuple(float(v) for v in np.concatenate([window[k:], window[:k]]))
            return CycleReport(p, points, tol)
    return CycleReport(None, (), tol)
