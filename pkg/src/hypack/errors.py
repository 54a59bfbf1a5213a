"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature could not certify the requested tolerance."""
