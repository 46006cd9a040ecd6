"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller handed us something malformed or out of contract."""


class PreconditionError(InputError):
    """A stated operation precondition does not hold.

    Carries the offending vertex when one exists, so callers can point
    at it in diagnostics.
    """

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class InternalCheckError(RuntimeError):
    """A consistency assertion failed on state we produced ourselves.

    Raised when a derived invariant is violated, which means a bug in
    this package rather than in the caller's input.
    """
