"""Exception types shared across the package."""


class ArgumentError(ValueError):
    """Raised when an argument violates a documented precondition."""


class DomainViolation(ValueError):
    """Raised when a value lies outside the mathematical domain of an operation."""


class MissingFundamentalUnit(ValueError):
    """Raised when an even-parity closed form is requested without a valid unit epsilon > 1."""


class ConfigError(ValueError):
    """Raised when a CLI config file contains unknown keys or unparseable values."""
