"""Discrete dynamics derived from Dirichlet L-function closed forms.

Two one-parameter-family maps (one per character parity) plus a logistic
reference map, with the full analysis pipeline: orbit iteration and cycle
detection, Lyapunov exponent estimation and (c, alpha) grid sweeps,
bifurcation diagrams with branch counting, Newton-Raphson fixed points with
stability classification, and entropy statistics.
"""

from .bifurcation import BifurcationData, bifurcation_diagram
from .errors import ArgumentError, ConfigError, DomainViolation, MissingFundamentalUnit
from .lyapunov import (
    LOG_FLOOR,
    LyapunovEstimate,
    LyapunovStatus,
    SweepGrid,
    lyapunov_exponent,
    sweep_grid,
)
from .maps import (
    DEFAULT_ESCAPE_BOUND,
    GOLDEN_RATIO,
    Escape,
    EvalOutcome,
    MapFamily,
    MapSpec,
    eval_derivative,
    eval_map,
    signed_power,
)
from .numbertheory import (
    BoundInputs,
    LFunctionInputs,
    dirichlet_l_at_1,
    log_lower_bound,
    log_zero_free_bound,
)
from .orbit import (
    CycleReport,
    EscapeEvent,
    OrbitRecord,
    detect_cycle,
    iterate_orbit,
)
from .roots import (
    RootFailure,
    RootReport,
    Stability,
    classify_stability,
    guess_sweep,
    newton_solve,
)
from .stats import (
    EntropyReport,
    Histogram,
    entropy_report,
    histogram,
    pesin_entropy,
    shannon_entropy,
    unimodality_check,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "BifurcationData",
    "BoundInputs",
    "ConfigError",
    "CycleReport",
    "DEFAULT_ESCAPE_BOUND",
    "DomainViolation",
    "EntropyReport",
    "Escape",
    "EscapeEvent",
    "EvalOutcome",
    "GOLDEN_RATIO",
    "Histogram",
    "LFunctionInputs",
    "LOG_FLOOR",
    "LyapunovEstimate",
    "LyapunovStatus",
    "MapFamily",
    "MapSpec",
    "MissingFundamentalUnit",
    "OrbitRecord",
    "RootFailure",
    "RootReport",
    "Stability",
    "SweepGrid",
    "bifurcation_diagram",
    "classify_stability",
    "detect_cycle",
    "dirichlet_l_at_1",
    "entropy_report",
    "eval_derivative",
    "eval_map",
    "guess_sweep",
    "histogram",
    "iterate_orbit",
    "log_lower_bound",
    "log_zero_free_bound",
    "lyapunov_exponent",
    "newton_solve",
    "pesin_entropy",
    "shannon_entropy",
    "signed_power",
    "sweep_grid",
    "unimodality_check",
]
