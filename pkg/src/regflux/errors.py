"""Exception hierarchy shared across the package."""


class RegfluxError(Exception):
    """Base class for all errors raised by this package."""


class InputError(RegfluxError):
    """Bad argument values (non-finite inputs, empty plans, mismatched runs)."""


class ConfigError(RegfluxError):
    """Invalid solver or scenario configuration (bad CFL, unknown keys)."""


class AssumptionError(RegfluxError):
    """A structural flux assumption is violated by construction."""


class ConvergenceError(RegfluxError):
    """Fixed-point iteration failed to converge."""

    def __init__(self, message, last_ratio=None, iterations=None):
        super().__init__(message)
        self.last_ratio = last_ratio
        self.iterations = iterations


class NumericalBlowupError(RegfluxError):
    """NaN/Inf detected during time stepping."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class CapacityError(RegfluxError):
    """A configured capacity (front count, event count) was exceeded."""


class UnsupportedClassError(RegfluxError):
    """Operation not available for this flux convexity class."""
