from typing import Any, Optional


class WmcLabError(RuntimeError):
    """Base class for all domain errors raised by libwmc.

    The command line tool maps these to exit status 2, printing the
    class name and the message on a single line.
    """
    pass


class InvalidAssignment(WmcLabError):
    pass


class ConstantFormula(WmcLabError):
    pass


class TooLarge(WmcLabError):
    pass


class EmptyDomain(WmcLabError):
    pass


class UnboundVariable(WmcLabError):
    pass


class InvalidDiagram(WmcLabError):
    pass


class Unsupported(WmcLabError):
    pass


class BudgetExhausted(WmcLabError):
    """Raised when a construction would exceed its node budget.

    Attributes:
        stats: Whatever statistics object the construction had
                collected when it gave up, if any.
    """
    def __init__(self, message: str, stats: Optional[Any] = None) -> None:
        super().__init__(message)
        self.stats = stats


class NotTransversalFree(WmcLabError):
    pass


class NotFullyDependent(WmcLabError):
    pass


class WrongFunction(WmcLabError):
    pass


class Refused(WmcLabError):
    pass


class NotMonotone(WmcLabError):
    pass


class UnsafeQuery(WmcLabError):
    pass


class InternalSafetyViolation(WmcLabError):
    pass


class ProbabilityMismatch(WmcLabError):
    pass


class LowerBoundViolation(WmcLabError):
    pass


class FormatError(WmcLabError):
    """Raised when an input file cannot be parsed.

    Args:
        message: What is wrong.
        source: Name of the file or stream, if known.
        line: 1-based line number, if known.
    """
    def __init__(
            self, message: str, source: Optional[str] = None,
            line: Optional[int] = None) -> None:
        where = ''
        if source is not None:
            where = source
            if line is not None:
                where += ':{}'.format(line)
            where += ': '
        super().__init__(where + message)
        self.source = source
        self.line = line
