"""Exception types shared across the toolkit, with stable CLI error codes."""


class ToolkitError(Exception):
    """Base class; ``code`` is the machine-readable identifier the CLI emits."""

    code = "error"
    exit_code = 1


class MalformedInputError(ToolkitError):
    code = "malformed-input"
    exit_code = 3


class OverlappingSupportError(ToolkitError):
    code = "overlapping-support"
    exit_code = 4


class NotAnSSequenceError(ToolkitError):
    code = "not-an-S-sequence"


class ZigzagLoopDetected(ToolkitError):
    """Raised when an operation that requires a loop-free set finds a loop.

    Carries the offending loop so callers can report or certify it.
    """

    code = "zigzag-loop"

    def __init__(self, message, loop=None):
        super().__init__(message)
        self.loop = loop


class MultiplicityOneViolation(ToolkitError):
    code = "multiplicity-one-violation"


class UnsolvedCaseError(ToolkitError):
    code = "unsolved-case"
    exit_code = 5
