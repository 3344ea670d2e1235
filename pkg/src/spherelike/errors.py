"""Exception types shared across modules."""

from __future__ import annotations


class PreconditionError(ValueError):
    """Input violates a mathematical precondition of the requested operation."""


class ConsistencyError(RuntimeError):
    """A property that holds in theory failed; indicates a bug."""
