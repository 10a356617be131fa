"""Semantic exception hierarchy for the workbench."""

from __future__ import annotations


class GaussBalanceError(Exception):
    """Base class for all workbench errors."""


class DomainError(GaussBalanceError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class QuadratureError(GaussBalanceError, RuntimeError):
    """Adaptive quadrature failed to reach its tolerance.

    The best available estimate is kept so callers can still report it.
    """

    def __init__(self, message: str, estimate: float):
        super().__init__(f"{message} (best estimate {estimate!r})")
        self.estimate = estimate


class BudgetError(GaussBalanceError, ValueError):
    """An enumeration budget (tuple length, recursion depth) was exceeded."""


class EnumerationError(GaussBalanceError, RuntimeError):
    """Lattice enumeration radius was insufficient after all retries."""

    def __init__(self, message: str, radius: float):
        super().__init__(f"{message} (radius used {radius!r})")
        self.radius = radius


class VerificationError(GaussBalanceError, AssertionError):
    """A numerically verified statement that is a proven theorem failed.

    Raised only for hard checks; a failure indicates an implementation bug,
    not an open question.
    """
