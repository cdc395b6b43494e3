"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class EnumerationTooLarge(ValueError):
    """A brute-force enumeration would exceed the step-sequence guard."""


class OverflowRisk(ValueError):
    """An unscaled evaluation would overflow double precision."""


class NonConvergence(ArithmeticError):
    """A series did not converge within the term cap."""


class DivergentIntegral(ArithmeticError):
    """The requested improper integral diverges."""


class ToleranceNotMet(ArithmeticError):
    """Adaptive refinement exhausted its budget before reaching tolerance."""
