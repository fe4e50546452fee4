"""Largest-Lyapunov-exponent estimation and (c, alpha) parameter-grid sweeps.

The estimator is the post-transient orbit average of log|f'(x_n)|. Grid cells
are independent scalar computations; sweeps may run them on a thread pool
(the kernels release the GIL) and the merge is keyed by cell index, so output
is bit-identical for any worker count.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from . import _kernels
from ._grid import axis as _axis
from .errors import ArgumentError
from .maps import MapSpec
from .orbit import DEFAULT_N_ITER, DEFAULT_TRANSIENT, DEFAULT_X0

__all__ = [
    "LOG_FLOOR",
    "LyapunovStatus",
    "LyapunovEstimate",
    "SweepGrid",
    "lyapunov_exponent",
    "sweep_grid",
]

# Per-term clamp for log|f'|: superstable points give log 0 = -inf, and the
# average must stay finite.
LOG_FLOOR = -700.0


class LyapunovStatus(Enum):
    CONVERGED = "converged"
    ESCAPED = "escaped"
    CLAMPED_FLOOR_HIT = "clamped_floor_hit"


@dataclass(frozen=True)
class LyapunovEstimate:
    """Estimated exponent, how many terms contributed, and how the run ended.

    For escaped orbits the exponent averages the terms accumulated up to the
    escape step (pre-transient terms if the escape preceded the transient
    end); an escape at step 0 yields exponent 0.0 with n_used 0.
    """

    exponent: float
    n_used: int
    status: LyapunovStatus
    escape_step: Optional[int] = None


@dataclass(frozen=True)
class SweepGrid:
    """Lyapunov estimates over a (c, alpha) grid; cells[i][j] sits at (c_axis[i], alpha_axis[j])."""

    c_axis: np.ndarray
    alpha_axis: np.ndarray
    cells: List[List[LyapunovEstimate]]
    base_spec: MapSpec
    x0: float

    def exponent_matrix(self) -> np.ndarray:
        return np.array([[cell.exponent for cell in row] for row in self.cells])

    def escaped_fraction(self) -> float:
        flat = [cell for row in self.cells for cell in row]
        return sum(cell.status is LyapunovStatus.ESCAPED for cell in flat) / len(flat)


def _estimate(
    spec: MapSpec, x0: float, n_iter: int, transient: int, log_floor: float
) -> LyapunovEstimate:
    fam, a, c, alpha, r = spec.kernel_args()
    exponent, n_used, code, step, clamped = _kernels.lyapunov_accumulate(
        fam, a, c, alpha, r, float(x0), n_iter, transient, spec.escape_bound, log_floor
    )
    if code != _kernels.OK:
        return LyapunovEstimate(exponent, n_used, LyapunovStatus.ESCAPED, step)
    if clamped:
        return LyapunovEstimate(exponent, n_used, LyapunovStatus.CLAMPED_FLOOR_HIT)
    return LyapunovEstimate(exponent, n_used, LyapunovStatus.CONVERGED)


def _validate_lengths(n_iter: int, transient: int, x0: float) -> None:
    if not isinstance(n_iter, int) or not isinstance(transient, int):
        raise ArgumentError("n_iter and transient must be integers")
    if not n_iter > transient >= 0:
        raise ArgumentError(
            f"need n_iter > transient >= 0, got n_iter={n_iter}, transient={transient}"
        )
    if not math.isfinite(x0):
        raise ArgumentError(f"x0 must be finite, got {x0}")


def lyapunov_exponent(
    spec: MapSpec,
    x0: float = DEFAULT_X0,
    n_iter: int = DEFAULT_N_ITER,
    transient: int = DEFAULT_TRANSIENT,
    log_floor: float = LOG_FLOOR,
) -> LyapunovEstimate:
    """Estimate the largest Lyapunov exponent of the orbit from x0."""
    _validate_lengths(n_iter, transient, x0)
    return _estimate(spec, x0, n_iter, transient, log_floor)


def sweep_grid(
    base: MapSpec,
    c_range: Tuple[float, float, int],
    alpha_range: Tuple[float, float, int],
    x0: float = DEFAULT_X0,
    n_iter: int = DEFAULT_N_ITER,
    transient: int = DEFAULT_TRANSIENT,
    workers: int = 1,
    log_floor: float = LOG_FLOOR,
) -> SweepGrid:
    """Lyapunov estimate at every (c, alpha) grid point, substituted into base.

    Each cell is exactly lyapunov_exponent at that point; results do not
    depend on evaluation order or worker count.
    """
    _validate_lengths(n_iter, transient, x0)
    if not isinstance(workers, int) or workers < 1:
        raise ArgumentError(f"workers must be an integer >= 1, got {workers}")
    c_axis = _axis(c_range, "c range")
    alpha_axis = _axis(alpha_range, "alpha range")

    specs = [
        [replace(base, c=float(cv), alpha=float(av)) for av in alpha_axis]
        for cv in c_axis
    ]

    def cell(idx: Tuple[int, int]) -> LyapunovEstimate:
        i, j = idx
        return _estimate(specs[i][j], x0, n_iter, transient, log_floor)

    indices = [(i, j) for i in range(len(c_axis)) for j in range(len(alpha_axis))]
    if workers == 1:
        flat = [cell(idx) for idx in indices]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flat = list(pool.map(cell, indices))

    n_alpha = len(alpha_axis)
    cells = [flat[i * n_alpha : (i + 1) * n_alpha] for i in range(len(c_axis))]
    return SweepGrid(c_axis, alpha_axis, cells, base, float(x0))
