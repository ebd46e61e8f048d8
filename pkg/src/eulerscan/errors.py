"""Exception types shared across the library."""


class EulerScanError(Exception):
    """Base class for every error raised by this package."""


class CycleDetected(EulerScanError):
    """The cover digraph contains a directed cycle, so it is not a poset."""


class SizeLimitExceeded(EulerScanError):
    """An exponential-time operation was invoked above its size bound."""


class NotMonotone(EulerScanError):
    """The function is not order-preserving; its excursion sets are not filters."""


class NegativeValues(EulerScanError):
    """The function takes negative values; the excursion decomposition is invalid."""


class NotOrderPreserving(EulerScanError):
    """The map violates x <= y  =>  f(x) <= f(y)."""


class UnknownFunction(EulerScanError):
    """The named function is not present in the document."""


class ImpossibleShape(EulerScanError):
    """The requested network shape cannot host the requested targets."""


class ParseError(EulerScanError):
    """The document cannot be parsed or fails schema validation."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
