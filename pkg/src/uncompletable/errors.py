"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

from typing import Any


class UncompletableError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(UncompletableError, ValueError):
    """An argument violates a documented precondition."""


class NotApplicableError(UncompletableError):
    """The operation is well defined only on inputs of a particular form."""


class ResourceLimitError(UncompletableError):
    """A search or enumeration exceeded its configured budget.

    ``stats`` carries whatever partial statistics were collected before the
    budget ran out; the answer itself is never guessed.
    """

    def __init__(self, message: str, stats: Any = None):
        super().__init__(message)
        self.stats = stats


class InternalInconsistencyError(UncompletableError, AssertionError):
    """Two independent computations of the same quantity disagree."""
