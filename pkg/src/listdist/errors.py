"""Exception types shared across the package."""


class ListDistError(Exception):
    """Base class for all errors raised by listdist."""


class GraphParseError(ListDistError, ValueError):
    """Malformed graph6 or edge-list input."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class CapExceededError(ListDistError):
    """A desk-scale guard was hit; the result would be incomplete."""


class GroupTruncatedError(CapExceededError):
    """Automorphism enumeration stopped before the group was complete."""
