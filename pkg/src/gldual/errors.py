"""Shared exception types."""


class LimitExceeded(RuntimeError):
    """An enumeration was refused because it would exceed a configured size limit."""


class RootFindingError(RuntimeError):
    """The simultaneous root-finder did not converge within its step budget."""
