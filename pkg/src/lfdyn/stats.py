"""Histograms, Shannon entropy, positive-exponent-sum entropy, and a unimodality check.

Entropy is reported in natural-log units, raw and normalized by log(bin
count), since reference values in this domain rarely state their units or
binning. The exponent-sum entropy (sum of strictly positive Lyapunov
exponents) upper-bounds metric entropy.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import ArgumentError

__all__ = [
    "Histogram",
    "EntropyReport",
    "histogram",
    "shannon_entropy",
    "pesin_entropy",
    "unimodality_check",
    "entropy_report",
]


@dataclass(frozen=True)
class Histogram:
    """Equal-width histogram: k+1 strictly increasing edges, k counts."""

    edges: np.ndarray
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def bins(self) -> int:
        return len(self.counts)

    def centers(self) -> np.ndarray:
        return 0.5 * (self.edges[:-1] + self.edges[1:])


def histogram(
    values: Sequence[float],
    bins: int,
    value_range: Optional[Tuple[float, float]] = None,
) -> Histogram:
    """Bin values into `bins` equal-width bins.

    Default range is [min, max] widened at the top by a 1e-9 relative margin
    so the maximum lands inside the last bin. With an explicit range, values
    outside it are excluded from the counts.
    """
    if not isinstance(bins, int) or bins < 1:
        raise ArgumentError(f"bins must be an integer >= 1, got {bins}")
    arr = np.asarray(values, dtype=np.float64)
    if arr.size == 0:
        raise ArgumentError("values must be nonempty")
    if not np.all(np.isfinite(arr)):
        raise ArgumentError("values must all be finite")
    if value_range is None:
        lo = float(arr.min())
        hi = float(arr.max())
        hi = hi + 1e-9 * max(1.0, abs(hi))
    else:
        lo, hi = float(value_range[0]), float(value_range[1])
        if not lo < hi:
            raise ArgumentError(f"range must satisfy lo < hi, got {lo}:{hi}")
    counts, edges = np.histogram(arr, bins=bins, range=(lo, hi))
    return Histogram(edges=edges, counts=counts)


def shannon_entropy(hist: Histogram) -> Tuple[float, float]:
    """(raw, normalized) Shannon entropy of the bin occupancy, natural log.

    normalized divides by log(bin count) and is 0 for a single-bin histogram.
    """
    total = hist.total
    if total < 1:
        raise ArgumentError("histogram must contain at least one count")
    p = hist.counts[hist.counts > 0] / total
    raw = float(-(p * np.log(p)).sum())
    if raw == 0.0:
        raw = 0.0  # normalize -0.0
    normalized = raw / np.log(hist.bins) if hist.bins > 1 else 0.0
    return raw, float(normalized)


def pesin_entropy(lambdas: Sequence[float]) -> float:
    """Sum of the strictly positive entries; 0.0 when there are none.

    Positives are summed in ascending order, so the result is exactly
    invariant under permutation of the input and under appending
    non-positive values.
    """
    arr = np.asarray(lambdas, dtype=np.float64)
    if arr.size == 0:
        raise ArgumentError("lambdas must be nonempty")
    pos = np.sort(arr[arr > 0.0])
    return float(pos.sum()) if pos.size else 0.0


def unimodality_check(
    hist: Histogram, smoothing_window: int = 1
) -> Tuple[bool, Optional[float]]:
    """Whether smoothed counts rise to a single maximal plateau then fall.

    Returns (is_unimodal, mode_center); mode_center is the midpoint of the
    central peak bin, or None when the histogram is not unimodal. The raw
    counts are noise-sensitive, hence the optional moving-average window
    (odd, >= 1; 1 means no smoothing).
    """
    if not isinstance(smoothing_window, int) or smoothing_window < 1 or smoothing_window % 2 == 0:
        raise ArgumentError(
            f"smoothing_window must be an odd integer >= 1, got {smoothing_window}"
        )
    s = hist.counts.astype(np.float64)
    if smoothing_window > 1:
        kernel = np.ones(smoothing_window) / smoothing_window
        s = np.convolve(s, kernel, mode="same")
    peak = s.max()
    at_peak = np.flatnonzero(s == peak)
    first, last = int(at_peak[0]), int(at_peak[-1])
    single_plateau = np.all(s[first : last + 1] == peak)
    rising = np.all(np.diff(s[: first + 1]) >= 0.0)
    falling = np.all(np.diff(s[last:]) <= 0.0)
    if not (single_plateau and rising and falling):
        return False, None
    mid = (first + last) // 2
    center = 0.5 * (hist.edges[mid] + hist.edges[mid + 1])
    return True, float(center)


@dataclass(frozen=True)
class EntropyReport:
    """Histogram Shannon entropy (raw and normalized) plus the positive-exponent sum."""

    shannon_raw: float
    shannon_normalized: float
    pesin: float


def entropy_report(
    values: Sequence[float],
    lambdas: Sequence[float],
    bins: int,
    value_range: Optional[Tuple[float, float]] = None,
) -> EntropyReport:
    """Bundle both entropy views: histogram entropy of values, exponent sum of lambdas."""
    raw, normalized = shannon_entropy(histogram(values, bins, value_range))
    return EntropyReport(raw, normalized, pesin_entropy(lambdas))
