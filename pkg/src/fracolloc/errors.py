"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "FracollocError",
    "DomainError",
    "ParameterError",
    "PoleError",
    "ConvergenceError",
    "SingularMatrixError",
    "ExpressionError",
    "ExpressionSyntaxError",
    "UnknownIdentifierError",
    "EvaluationError",
]


class FracollocError(Exception):
    """Base class for all package errors."""


class DomainError(FracollocError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParameterError(FracollocError, ValueError):
    """A structural parameter (weight exponent, size, id) is invalid."""


class PoleError(DomainError):
    """Evaluation requested at a pole of a special function."""


class ConvergenceError(FracollocError, ArithmeticError):
    """An iterative process failed to converge within its budget."""


class SingularMatrixError(FracollocError, ArithmeticError):
    """A pivot collapsed during factorization; the system is singular."""


class ExpressionError(FracollocError):
    """Base class for expression grammar errors."""


class ExpressionSyntaxError(ExpressionError, ValueError):
    """Malformed expression source.

    Carries the byte offset of the failure and the set of token kinds
    that would have been acceptable there.
    """

    def __init__(self, message: str, offset: int, expected: frozenset[str]):
        super().__init__(f"{message} at offset {offset} (expected: {', '.join(sorted(expected))})")
        self.offset = offset
        self.expected = expected


class UnknownIdentifierError(ExpressionError, ValueError):
    """An identifier in an expression is not a known function or constant."""

    def __init__(self, name: str, offset: int):
        super().__init__(f"unknown identifier '{name}' at offset {offset}")
        self.name = name
        self.offset = offset


class EvaluationError(ExpressionError, ArithmeticError):
    """Expression evaluation hit a domain fault (division by zero, ln of
    a non-positive number, and so on)."""
