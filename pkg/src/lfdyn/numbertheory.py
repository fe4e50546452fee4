"""Closed-form values of L(1, chi) for real primitive characters, and log-space bounds.

The value of the Dirichlet L-series at s = 1 for a real primitive character
mod m is given by class number formulas: 2*pi*h / (w*sqrt(m)) in the odd case
chi(-1) = -1, and 2*h*log(epsilon) / (w*sqrt(m)) in the even case chi(-1) = +1.
The class number h, root-of-unity count w, and fundamental unit epsilon are
caller-supplied inputs; nothing here computes field invariants.

Lower bounds of the shape C * (log D)^(-A) underflow float64 for A in the
thousands, so the bound functions return natural logs and leave
exponentiation to the caller.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .errors import ArgumentError, DomainViolation, MissingFundamentalUnit

__all__ = [
    "LFunctionInputs",
    "BoundInputs",
    "dirichlet_l_at_1",
    "log_lower_bound",
    "log_zero_free_bound",
]


@dataclass(frozen=True)
class LFunctionInputs:
    """Inputs to the closed form: character parity and field invariants.

    parity is chi(-1), either -1 or +1. epsilon (the fundamental unit) is
    required and must exceed 1 when parity is +1; it is ignored otherwise.
    """

    parity: int
    h: int
    w: int
    m: int
    epsilon: Optional[float] = None

    def __post_init__(self):
        if self.parity not in (-1, 1):
            raise ArgumentError(f"parity must be -1 or +1, got {self.parity}")
        if not isinstance(self.h, int) or self.h < 1:
            raise ArgumentError(f"class number h must be a positive integer, got {self.h}")
        if not isinstance(self.w, int) or self.w < 1:
            raise ArgumentError(f"root-of-unity count w must be a positive integer, got {self.w}")
        if not isinstance(self.m, int) or self.m < 3:
            raise ArgumentError(f"modulus m must be an integer >= 3, got {self.m}")
        if self.parity == 1:
            eps = self.epsilon
            if eps is None or not math.isfinite(eps) or eps <= 1.0:
                raise MissingFundamentalUnit(
                    f"parity +1 requires a fundamental unit epsilon > 1, got {eps}"
                )


@dataclass(frozen=True)
class BoundInputs:
    """Inputs to the log-space bounds: modulus D (or q), constant, and exponent A."""

    modulus: float
    constant: float
    exponent: float

    def __post_init__(self):
        if not math.isfinite(self.modulus) or self.modulus <= 1.0:
            raise DomainViolation(
                f"modulus must be > 1 so log(log(modulus)) is defined, got {self.modulus}"
            )
        if not math.isfinite(self.constant) or self.constant <= 0.0:
            raise ArgumentError(f"constant must be positive, got {self.constant}")
        if not math.isfinite(self.exponent) or self.exponent <= 0.0:
            raise ArgumentError(f"exponent must be positive, got {self.exponent}")


def dirichlet_l_at_1(inputs: LFunctionInputs) -> float:
    """Evaluate the closed form for L(1, chi).

    Returns 2*pi*h / (w*sqrt(m)) for parity -1 and
    2*h*log(epsilon) / (w*sqrt(m)) for parity +1. Always positive.
    """
    sqrt_m = math.sqrt(inputs.m)
    if inputs.parity == -1:
        return 2.0 * math.pi * inputs.h / (inputs.w * sqrt_m)
    return 2.0 * inputs.h * math.log(inputs.epsilon) / (inputs.w * sqrt_m)


def log_lower_bound(inputs: BoundInputs) -> float:
    """Natural log of constant * (log modulus)^(-exponent).

    Kept in log space: for exponents in the thousands the bound itself
    underflows float64 for any realistic modulus.
    """
    return math.log(inputs.constant) - inputs.exponent * math.log(math.log(inputs.modulus))


def log_zero_free_bound(inputs: BoundInputs) -> float:
    """Natural log of constant * (log modulus)^(-(exponent + 2)).

    Identical to log_lower_bound with the exponent raised by exactly 2.
    """
    widened = BoundInputs(inputs.modulus, inputs.constant, inputs.exponent + 2.0)
    return log_lower_bound(widened)
