"""Exception types raised by the expwell library."""


class ExpwellError(Exception):
    """Base class for all library-specific errors."""


class DomainError(ExpwellError, ValueError):
    """An argument lies outside the supported range of a routine."""


class PoleError(ExpwellError, ValueError):
    """Gamma evaluated at a non-positive integer."""


class GammaOverflowError(ExpwellError, OverflowError):
    """Gamma(x) exceeds the largest representable double."""


class QuadratureError(ExpwellError, RuntimeError):
    """A quadrature sample was non-finite or the rule could not be applied."""


class DivergenceError(QuadratureError):
    """Panel contributions grow instead of decaying: integral looks divergent."""


class ParameterMismatchError(ExpwellError, ValueError):
    """A bound state does not belong to the given potential parameters."""


class GridTooCoarseError(ExpwellError, ValueError):
    """A sampled table has too few points for the requested stencil."""


class ConvergenceError(ExpwellError, RuntimeError):
    """An iterative computation failed to converge within its budget."""
