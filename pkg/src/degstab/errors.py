"""Shared exception types."""


class CapExceededError(Exception):
    """Raised when a requested enumeration or sweep exceeds the desk-scale caps."""


class ConsistencyError(Exception):
    """Raised when an internal cross-check fails (signals an implementation bug)."""
