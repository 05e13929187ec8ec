"""Shared exception types."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; results cannot be trusted."""


class NonIntegerError(ConsistencyError):
    """A value expected to be a rational integer is not one."""
