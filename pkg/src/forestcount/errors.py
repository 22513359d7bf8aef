"""Exception hierarchy.

Everything raised for bad input derives from ``ForestCountError`` (itself a
``ValueError``); the CLI maps these to exit status 1.
"""


class ForestCountError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CycleError(ForestCountError):
    pass


class SelfLoopError(ForestCountError):
    pass


class RangeError(ForestCountError):
    pass


class DuplicateEdgeError(ForestCountError):
    pass


class PartitionMismatchError(ForestCountError):
    pass


class EdgeAbsentError(ForestCountError):
    pass


class SizeMismatchError(ForestCountError):
    pass


class TooLargeError(ForestCountError):
    pass


class ParseError(ForestCountError):
    pass


class ExactDivisionViolation(AssertionError):
    """A fraction-free elimination step produced a non-exact division.

    This is an internal bug, never a property of the input.
    """
