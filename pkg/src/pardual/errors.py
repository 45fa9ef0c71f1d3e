"""Exception hierarchy shared by every module."""


class PardualError(Exception):
    """Base class for all errors raised by this package."""


class Graph6Error(PardualError, ValueError):
    """Malformed graph6 input.

    Attributes:
        offset: byte offset of the offending character, or None when the
            problem is not tied to a single byte.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class GraphFormatError(PardualError, ValueError):
    """Malformed edge-list or rotation-system text."""


class DomainError(PardualError, ValueError):
    """Input outside the mathematical domain of an operation
    (disconnected where connectivity is required, non-planar, ...)."""


class CapacityError(PardualError):
    """Exact computation would exceed the supported enumeration size."""


class HostMismatchError(PardualError, ValueError):
    """An EdgeSubset was used with a graph other than its host."""


class MapInvariantError(PardualError, AssertionError):
    """A combinatorial map violated a structural invariant. Signals a bug."""
