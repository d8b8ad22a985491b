"""
Exception hierarchy shared by all chainforge services
"""
from typing import Optional


class ChainforgeError(Exception):
    """Base class for every error raised by the toolkit"""


class DimensionMismatchError(ChainforgeError, ValueError):
    """Two points (or a point and a set) disagree on n or d"""


class OutOfRangeError(ChainforgeError, ValueError):
    """An index lies outside the domain of the requested operation"""


class UnsupportedVariantError(ChainforgeError, ValueError):
    """A candidate variant or chain family is not defined for the given d"""


class NotAChainError(ChainforgeError, ValueError):
    """Consecutive points are not related by a unit increment"""


class UnknownLemmaError(ChainforgeError, KeyError):
    """No checker is registered under the requested lemma name"""


class BudgetExceededError(ChainforgeError):
    """A configured resource budget would be exceeded"""

    def __init__(self, budget: str, limit: int, requested: int, hint: Optional[str] = None):
        self.budget = budget
        self.limit = limit
        self.requested = requested
        message = f"{budget} budget exceeded: requested {requested}, limit {limit}"
        if hint:
            message = f"{message} ({hint})"
        super().__init__(message)
