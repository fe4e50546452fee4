"""Bifurcation-diagram data: attractor samples and branch counts along one parameter."""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Tuple

import numpy as np

from . import _kernels
from ._grid import axis as _axis
from .errors import ArgumentError
from .maps import MapFamily, MapSpec
from .orbit import DEFAULT_N_ITER, DEFAULT_TRANSIENT, DEFAULT_X0

__all__ = [
    "DEFAULT_SAMPLES_PER_PARAM",
    "DEFAULT_CLUSTER_TOL",
    "BifurcationData",
    "bifurcation_diagram",
]

# Enough samples to resolve periods up to 16 cleanly.
DEFAULT_SAMPLES_PER_PARAM = 200
DEFAULT_CLUSTER_TOL = 1e-4

_SWEEPABLE = ("c", "alpha", "r")


@dataclass(frozen=True)
class BifurcationData:
    """Per-parameter attractor samples and distinct-branch counts.

    Escaped parameter values record empty samples and a branch count of 0.
    """

    param_name: str
    param_values: np.ndarray
    attractor_samples: List[np.ndarray]
    branch_counts: np.ndarray


def _branch_count(samples: np.ndarray, cluster_tol: float) -> int:
    """Single-linkage cluster count at absolute tolerance: sorted-gap splits."""
    if samples.size == 0:
        return 0
    gaps = np.diff(np.sort(samples))
    return 1 + int(np.count_nonzero(gaps > cluster_tol))


def bifurcation_diagram(
    base: MapSpec,
    param: str,
    param_range: Tuple[float, float, int],
    x0: float = DEFAULT_X0,
    n_iter: int = DEFAULT_N_ITER,
    transient: int = DEFAULT_TRANSIENT,
    samples_per_param: int = DEFAULT_SAMPLES_PER_PARAM,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    workers: int = 1,
) -> BifurcationData:
    """Sweep one parameter, keeping the last samples_per_param iterates per value.

    The kept window is clustered with single linkage at cluster_tol to count
    attractor branches. Output is deterministic and independent of worker
    count (per-value results are merged by index).
    """
    if param not in _SWEEPABLE:
        raise ArgumentError(f"param must be one of {_SWEEPABLE}, got {param!r}")
    if param == "r" and base.family is not MapFamily.LOGISTIC:
        raise ArgumentError("parameter r only applies to the logistic family")
    if not isinstance(samples_per_param, int) or samples_per_param < 1:
        raise ArgumentError(
            f"samples_per_param must be an integer >= 1, got {samples_per_param}"
        )
    if not isinstance(n_iter, int) or not isinstance(transient, int) or transient < 0:
        raise ArgumentError("n_iter and transient must be non-negative integers")
    if not n_iter > transient + samples_per_param:
        raise ArgumentError(
            "need n_iter > transient + samples_per_param, got "
            f"{n_iter} <= {transient} + {samples_per_param}"
        )
    if not cluster_tol > 0.0:
        raise ArgumentError(f"cluster_tol must be positive, got {cluster_tol}")
    if not isinstance(workers, int) or workers < 1:
        raise ArgumentError(f"workers must be an integer >= 1, got {workers}")
    if not math.isfinite(x0):
        raise ArgumentError(f"x0 must be finite, got {x0}")

    values = _axis(param_range, "parameter range")
    specs = [replace(base, **{param: float(v)}) for v in values]
    record_from = n_iter - samples_per_param  # window start; lies past transient

    def scan(i: int) -> np.ndarray:
        spec = specs[i]
        fam, a, c, alpha, r = spec.kernel_args()
        buf = np.empty(samples_per_param, dtype=np.float64)
        n_written, code, _step = _kernels.orbit_fill(
            fam, a, c, alpha, r, float(x0), n_iter, record_from, spec.escape_bound, buf
        )
        if code != _kernels.OK:
            return np.empty(0, dtype=np.float64)
        return buf[:n_written]

    indices = range(len(values))
    if workers == 1:
        samples = [scan(i) for i in indices]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            samples = list(pool.map(scan, indices))

    counts = np.array([_branch_count(s, cluster_tol) for s in samples], dtype=np.int64)
    for s in samples:
        s.flags.writeable = False
    return BifurcationData(param, values, samples, counts)
