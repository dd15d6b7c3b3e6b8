"""Exception types shared across the package."""


class QrgError(ValueError):
    """Base class for all validation and numeric-domain errors."""


class NotXStructured(QrgError):
    """Matrix has weight outside the X sparsity pattern."""


class NotDensityMatrix(QrgError):
    """Matrix or parameter set fails Hermiticity, unit trace, or positivity."""


class InvalidDistribution(QrgError):
    """Probability vector has entries outside [0, 1] or does not sum to 1."""


class DomainError(QrgError):
    """Scalar argument outside the domain of a map or formula."""


class NonUniformGrid(QrgError):
    """Derivative stencil requires a uniformly spaced grid."""


class ExtremumAtBoundary(QrgError):
    """Extremum landed on the first or last grid point; cannot refine."""


class NonPositiveValue(QrgError):
    """Log-log fit requires strictly positive sizes and values."""


class NotSymmetric(QrgError):
    """Dense eigensolver requires a real symmetric matrix."""
