"""
Exception types shared by every module of the toolkit.
"""


class TQFTError(Exception):
    """Base class for all errors raised by the toolkit."""
    pass


class ValidationError(TQFTError, ValueError):
    """Input rejected: malformed data or a violated precondition."""
    pass


class GuardExceeded(ValidationError):
    """A configured size cap would be exceeded."""
    pass


class InvariantViolation(TQFTError, RuntimeError):
    """
    A computed object failed one of its own invariants.

    The invariant's name is kept so that callers (the CLI, the selftest)
    can report exactly which check broke.
    """

    def __init__(self, name: str, message: str):
        super().__init__(f"{name}: {message}")
        self.name = name
        self.message = message
