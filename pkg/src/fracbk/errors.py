"""Exception types shared across the package."""


class FracbkError(Exception):
    """Base class for all package-specific errors."""


class ParseError(FracbkError):
    """Lexical or syntactic error in a function expression.

    Carries the character position where scanning or parsing failed.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class EvaluationError(FracbkError):
    """Expression evaluation failed (unbound variable, division by zero,
    non-finite intermediate value)."""


class DomainError(FracbkError):
    """A numeric argument lies outside the mathematical domain of an
    operation (e.g. a non-positive Gamma argument, alpha outside [0,1])."""


class UnsupportedOrderError(FracbkError):
    """A moment order was requested for which no closed form exists."""


class QuadratureError(FracbkError):
    """Quadrature construction or refinement failed (eigen-solve failure,
    refinement budget exceeded, non-finite integrand, cross-check mismatch)."""
