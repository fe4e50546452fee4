"""Map families and pointwise evaluation with explicit escape semantics.

Two parameterized families come from the L(1, chi) closed forms, one per
character parity, plus the logistic map as an analytically tractable
reference:

    odd:       x -> beta / sqrt(x)                    + c * P(log x)
    even:      x -> beta * log(epsilon) / (pi sqrt(x)) + c * P(log x)
    logistic:  x -> r * x * (1 - x)

with beta = 2*pi*h/w (overridable directly for sweeps).

Convention for the power term (documented interpretation): c * log(x)^(-alpha)
is read as c * (log x)^(-alpha), and the negative-base case is resolved by the
odd signed extension

    P(y) = sign(y) * |y| ** (-alpha),

which keeps orbits real through 0 < x < 1 for non-integer alpha and agrees
with the plain power for integer alpha of matching parity. P's uniform
derivative is -alpha * |y| ** (-alpha - 1), so the map derivative is smooth on
both sides of x = 1.

Evaluation never raises on bad points; it returns an EvalOutcome carrying
either a finite value or an escape reason (domain violation at x <= 0, log
pole at x = 1 with an active power term, overflow past the escape bound).
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from . import _kernels
from .errors import ArgumentError

__all__ = [
    "GOLDEN_RATIO",
    "DEFAULT_ESCAPE_BOUND",
    "MapFamily",
    "MapSpec",
    "Escape",
    "EvalOutcome",
    "eval_map",
    "eval_derivative",
    "signed_power",
]

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0

# Recorded orbits of these maps reach magnitudes near 1e76, so the default
# overflow cutoff must sit far above that.
DEFAULT_ESCAPE_BOUND = 1e100


class MapFamily(Enum):
    ODD = "odd"
    EVEN = "even"
    LOGISTIC = "logistic"


class Escape(Enum):
    DOMAIN_VIOLATION = "domain_violation"
    LOG_POLE = "log_pole"
    OVERFLOW = "overflow"


_ESCAPE_FROM_CODE = {
    _kernels.DOMAIN_VIOLATION: Escape.DOMAIN_VIOLATION,
    _kernels.LOG_POLE: Escape.LOG_POLE,
    _kernels.OVERFLOW: Escape.OVERFLOW,
}


@dataclass(frozen=True)
class MapSpec:
    """Full parameterization of one map; the single source of truth for every symbol.

    beta defaults to 2*pi*h/w = pi (h=1, w=2); pass beta_override to explore
    other regimes directly, including beta = 0. epsilon matters only for the
    even family and defaults to the golden ratio, the fundamental unit of the
    smallest real quadratic field. r is required for (and only read by) the
    logistic family.
    """

    family: MapFamily
    h: int = 1
    w: int = 2
    epsilon: float = GOLDEN_RATIO
    c: float = 0.0
    alpha: float = 0.0
    r: Optional[float] = None
    beta_override: Optional[float] = None
    escape_bound: float = DEFAULT_ESCAPE_BOUND

    def __post_init__(self):
        if not isinstance(self.family, MapFamily):
            raise ArgumentError(f"family must be a MapFamily, got {self.family!r}")
        if not isinstance(self.h, int) or self.h < 1:
            raise ArgumentError(f"h must be a positive integer, got {self.h}")
        if not isinstance(self.w, int) or self.w < 1:
            raise ArgumentError(f"w must be a positive integer, got {self.w}")
        if not math.isfinite(self.c):
            raise ArgumentError(f"c must be finite, got {self.c}")
        if not math.isfinite(self.alpha) or self.alpha < 0.0:
            raise ArgumentError(f"alpha must be finite and >= 0, got {self.alpha}")
        if self.beta_override is not None:
            if not math.isfinite(self.beta_override) or self.beta_override < 0.0:
                raise ArgumentError(
                    f"beta override must be finite and >= 0, got {self.beta_override}"
                )
        if self.family is MapFamily.EVEN:
            if not math.isfinite(self.epsilon) or self.epsilon <= 1.0:
                raise ArgumentError(
                    f"even family requires a fundamental unit epsilon > 1, got {self.epsilon}"
                )
        if self.family is MapFamily.LOGISTIC:
            if self.r is None or not math.isfinite(self.r) or not 0.0 < self.r <= 4.0:
                raise ArgumentError(
                    f"logistic family requires 0 < r <= 4, got {self.r}"
                )
        if not math.isfinite(self.escape_bound) or self.escape_bound <= 0.0:
            raise ArgumentError(f"escape bound must be positive, got {self.escape_bound}")

    @property
    def beta(self) -> float:
        if self.beta_override is not None:
            return self.beta_override
        return 2.0 * math.pi * self.h / self.w

    @property
    def sqrt_coefficient(self) -> float:
        """Coefficient of x^(-1/2): beta (odd) or beta*log(epsilon)/pi (even)."""
        if self.family is MapFamily.EVEN:
            return self.beta * math.log(self.epsilon) / math.pi
        return self.beta

    def kernel_args(self):
        """(family_code, sqrt_coefficient, c, alpha, r) as plain scalars for the kernels."""
        if self.family is MapFamily.LOGISTIC:
            return _kernels.FAM_LOGISTIC, 0.0, 0.0, 0.0, float(self.r)
        return _kernels.FAM_SQRT, self.sqrt_coefficient, float(self.c), float(self.alpha), 0.0


@dataclass(frozen=True)
class EvalOutcome:
    """Either a finite value or an escape reason, never both."""

    value: Optional[float] = None
    escape: Optional[Escape] = None

    def __post_init__(self):
        if (self.value is None) == (self.escape is None):
            raise ArgumentError("exactly one of value/escape must be set")

    @property
    def ok(self) -> bool:
        return self.escape is None


def _wrap(value: float, code: int) -> EvalOutcome:
    if code == _kernels.OK:
        return EvalOutcome(value=value)
    return EvalOutcome(escape=_ESCAPE_FROM_CODE[code])


def eval_map(spec: MapSpec, x: float) -> EvalOutcome:
    """Evaluate the map at x. Accepts any real x; invalid points escape."""
    fam, a, c, alpha, r = spec.kernel_args()
    return _wrap(*_kernels.eval_step(fam, a, c, alpha, r, float(x), spec.escape_bound))


def eval_derivative(spec: MapSpec, x: float) -> EvalOutcome:
    """Evaluate the analytic derivative at x, with the map's escape semantics."""
    fam, a, c, alpha, r = spec.kernel_args()
    return _wrap(*_kernels.eval_deriv(fam, a, c, alpha, r, float(x), spec.escape_bound))


def signed_power(y: float, alpha: float) -> float:
    """P(y) = sign(y) * |y| ** (-alpha); the odd extension used in the power term."""
    return _kernels.signed_power(float(y), float(alpha))
