"""Shared (lo, hi, count) range validation used by sweeps and the CLI."""

import math
from typing import Tuple

import numpy as np

from .errors import ArgumentError


def axis(rng: Tuple[float, float, int], name: str) -> np.ndarray:
    """Strictly increasing grid axis from (lo, hi, count); count 1 needs lo == hi."""
    lo, hi, count = rng
    if not isinstance(count, int) or count < 1:
        raise ArgumentError(f"{name} count must be an integer >= 1, got {count}")
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ArgumentError(f"{name} bounds must be finite, got {lo}:{hi}")
    if count == 1:
        if lo != hi:
            raise ArgumentError(f"{name} with count 1 requires lo == hi, got {lo}:{hi}")
        return np.array([float(lo)])
    if not lo < hi:
        raise ArgumentError(f"{name} must be strictly increasing, got {lo}:{hi}")
    return np.linspace(lo, hi, count)
