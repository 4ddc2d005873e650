"""Exception types shared across the toolkit."""


class SlitkitError(Exception):
    """Base class for all toolkit errors."""


class DomainError(SlitkitError):
    """Input lies outside the region where an operation is defined."""


class PoleError(SlitkitError):
    """Evaluation point coincides with a pole or a zero of a retained factor."""


class ConvergenceError(SlitkitError):
    """An iterative solve (Newton, bisection, grid search) failed to converge."""


class GeometryError(SlitkitError):
    """A constructed geometric object does not fit inside its required region."""


class SingularMatrixError(SlitkitError):
    """A linear system that should be invertible turned out singular."""


class NumericalOverflowError(SlitkitError):
    """Intermediate magnitudes left the representable floating-point range."""
