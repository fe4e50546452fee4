"""Newton-Raphson fixed-point solving and stability classification.

Solves f(x) - x = 0 with the analytic derivative, falling back to a central
finite difference only when the analytic form escapes (the report flags it).
Iterates leaving the map's real domain are rejected rather than continued
onto a complex branch.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from .errors import ArgumentError, DomainViolation
from .maps import Escape, MapSpec, eval_derivative, eval_map

__all__ = [
    "DEFAULT_TOL",
    "DEFAULT_MAX_ITER",
    "DEFAULT_MARGINAL_BAND",
    "Stability",
    "RootFailure",
    "RootReport",
    "newton_solve",
    "classify_stability",
    "guess_sweep",
]

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 200
DEFAULT_MARGINAL_BAND = 1e-6

_ZERO_DERIVATIVE_FLOOR = 1e-14
_FD_STEP_SCALE = 1e-7


class Stability(Enum):
    STABLE = "stable"
    UNSTABLE = "unstable"
    MARGINAL = "marginal"


class RootFailure(Enum):
    ZERO_DERIVATIVE = "zero_derivative"
    MAX_ITERATIONS = "max_iterations"
    ESCAPED_DOMAIN = "escaped_domain"


@dataclass(frozen=True)
class RootReport:
    """One Newton run: root and stability on success, failure reason otherwise.

    residual is |f(x) - x| at the final accepted point. residual_history
    records it per visited iterate, guess first. used_fd_fallback marks runs
    where any Newton step used the finite-difference derivative.
    """

    guess: float
    root: Optional[float]
    iterations: int
    residual: float
    derivative_at_root: Optional[float]
    stability: Optional[Stability]
    failure: Optional[RootFailure]
    used_fd_fallback: bool = False
    residual_history: Tuple[float, ...] = ()


def _classify(magnitude: float, marginal_band: float) -> Stability:
    if magnitude < 1.0 - marginal_band:
        return Stability.STABLE
    if magnitude > 1.0 + marginal_band:
        return Stability.UNSTABLE
    return Stability.MARGINAL


def classify_stability(
    spec: MapSpec, root: float, marginal_band: float = DEFAULT_MARGINAL_BAND
) -> Stability:
    """Classify a fixed point by |f'(root)| against 1 +/- marginal_band."""
    if not marginal_band >= 0.0:
        raise ArgumentError(f"marginal_band must be >= 0, got {marginal_band}")
    out = eval_derivative(spec, root)
    if out.escape in (Escape.DOMAIN_VIOLATION, Escape.LOG_POLE):
        raise DomainViolation(f"root {root} lies outside the map domain")
    if out.escape is Escape.OVERFLOW:
        # magnitude beyond the escape bound is certainly > 1 + band
        return Stability.UNSTABLE
    return _classify(abs(out.value), marginal_band)


def _derivative_with_fallback(spec: MapSpec, x: float) -> Tuple[Optional[float], bool]:
    """Analytic derivative, else central finite difference. (value, used_fd)."""
    out = eval_derivative(spec, x)
    if out.ok:
        return out.value, False
    step = _FD_STEP_SCALE * max(1.0, abs(x))
    lo = eval_map(spec, x - step)
    hi = eval_map(spec, x + step)
    if not (lo.ok and hi.ok):
        return None, True
    return (hi.value - lo.value) / (2.0 * step), True


def newton_solve(
    spec: MapSpec,
    guess: float,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    marginal_band: float = DEFAULT_MARGINAL_BAND,
) -> RootReport:
    """Solve f(x) = x from guess via x <- x - g(x)/g'(x) with g = f(x) - x.

    Convergence is checked before the first update, so a guess that is
    already a root reports 0 iterations.
    """
    if not tol > 0.0:
        raise ArgumentError(f"tol must be positive, got {tol}")
    if not isinstance(max_iter, int) or max_iter < 1:
        raise ArgumentError(f"max_iter must be an integer >= 1, got {max_iter}")
    if not math.isfinite(guess):
        raise ArgumentError(f"guess must be finite, got {guess}")

    x = float(guess)
    history: List[float] = []
    used_fd = False

    def fail(reason: RootFailure, iterations: int) -> RootReport:
        residual = history[-1] if history else math.inf
        return RootReport(
            guess=float(guess),
            root=None,
            iterations=iterations,
            residual=residual,
            derivative_at_root=None,
            stability=None,
            failure=reason,
            used_fd_fallback=used_fd,
            residual_history=tuple(history),
        )

    for k in range(max_iter + 1):
        fx = eval_map(spec, x)
        if not fx.ok:
            return fail(RootFailure.ESCAPED_DOMAIN, k)
        g = fx.value - x
        history.append(abs(g))
        if abs(g) <= tol:
            d_at_root, fd_here = _derivative_with_fallback(spec, x)
            used_fd = used_fd or fd_here
            stability = (
                _classify(abs(d_at_root), marginal_band) if d_at_root is not None else None
            )
            return RootReport(
                guess=float(guess),
                root=x,
                iterations=k,
                residual=abs(g),
                derivative_at_root=d_at_root,
                stability=stability,
                failure=None,
                used_fd_fallback=used_fd,
                residual_history=tuple(history),
            )
        if k == max_iter:
            return fail(RootFailure.MAX_ITERATIONS, k)
        d, fd_here = _derivative_with_fallback(spec, x)
        used_fd = used_fd or fd_here
        if d is None:
            return fail(RootFailure.ESCAPED_DOMAIN, k)
        gprime = d - 1.0
        if abs(gprime) < _ZERO_DERIVATIVE_FLOOR:
            return fail(RootFailure.ZERO_DERIVATIVE, k)
        x = x - g / gprime
    raise AssertionError("unreachable")


def guess_sweep(
    spec: MapSpec,
    guesses: Sequence[float],
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    marginal_band: float = DEFAULT_MARGINAL_BAND,
) -> List[RootReport]:
    """One RootReport per guess, order-preserving; per-guess failures are embedded."""
    return [newton_solve(spec, g, tol, max_iter, marginal_band) for g in guesses]
