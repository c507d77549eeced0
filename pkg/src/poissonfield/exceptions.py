"""Exception types raised across the library."""


class PoissonFieldError(Exception):
    """Base class for all library-specific errors."""


class DegenerateDistributionError(PoissonFieldError, ValueError):
    """A distribution collapsed to a point mass where a spread is required."""


class DivergenceError(PoissonFieldError, ValueError):
    """Infinite-plane aggregate interference diverges (loss exponent <= 1)."""


class SingularityError(PoissonFieldError, ValueError):
    """An interferer is co-located with the probe receiver."""


class AccuracyError(PoissonFieldError, RuntimeError):
    """A numerical routine failed to reach its configured tolerance."""


class GeometryError(PoissonFieldError, ValueError):
    """Constellation geometry is degenerate (duplicate or invalid points)."""


class BracketingError(PoissonFieldError, RuntimeError):
    """A root-finding target lies outside the achievable range."""


class ConfigError(PoissonFieldError, ValueError):
    """Invalid run configuration (bad flag value or config file)."""
