"""Exception hierarchy shared across the toolkit.

CLI exit codes: ConfigError -> 2, NumericalError (and subclasses) -> 3.
"""


class DrivebyError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(DrivebyError):
    """Invalid configuration file, parameter set, or plan."""


class GeometryError(ConfigError):
    """Non-physical geometry (non-positive section properties, crack outside span, ...)."""


class NumericalError(DrivebyError):
    """Numerical failure: singular system, eigen-solver breakdown, NaN states."""


class AssemblyError(NumericalError):
    """Constrained system could not be assembled or factorized."""


class SolverError(NumericalError):
    """Time integration failed (non-convergent coupling step, NaN detected)."""


class SpanError(DrivebyError):
    """Position outside the bridge span where an on-span value was required."""
