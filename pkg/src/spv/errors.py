"""Exception types shared by the arithmetic, kernel and numeric layers."""

from __future__ import annotations


class SpvError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SpvError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class PoleError(SpvError, ZeroDivisionError):
    """A denominator vanishes.

    ``poles`` lists every offending location: summation indices ``k`` for
    identity instances, or the offending argument for the Gamma function.
    """

    def __init__(self, poles, message: str | None = None):
        self.poles = list(poles)
        if message is None:
            message = f"vanishing denominator at k in {self.poles}"
        super().__init__(message)


class ZeroToNegativePower(SpvError, ZeroDivisionError):
    pass


class NoConvergence(SpvError, ArithmeticError):
    """Quadrature hit its level cap before meeting the tolerance.

    The partial result is kept on ``result``.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result
