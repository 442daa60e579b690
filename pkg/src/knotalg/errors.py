"""Shared exception types."""


class CapacityError(RuntimeError):
    """State enumeration would exceed the configured crossing cap."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""
