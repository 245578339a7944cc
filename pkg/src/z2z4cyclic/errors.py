"""Exception hierarchy shared by every module of the package."""


class Z2Z4Error(Exception):
    """Base class for all errors raised by z2z4cyclic."""


class InvalidInput(Z2Z4Error):
    """The input violates a documented precondition."""


class NonUnitLeadingCoefficient(InvalidInput, ArithmeticError):
    pass


class DivisionByZero(InvalidInput, ZeroDivisionError):
    pass


class NotADivisor(InvalidInput):
    pass


class EvenLength(InvalidInput):
    """Raised when the quaternary length beta is even."""


class DimensionMismatch(InvalidInput, ValueError):
    pass


class NoSolution(InvalidInput):
    pass


class TooLarge(InvalidInput):
    pass


class TooManyRows(InvalidInput):
    pass


class NotCyclic(InvalidInput):
    pass


class InvalidGenerators(InvalidInput):
    pass


class InternalInconsistency(Z2Z4Error, RuntimeError):
    """An algorithm invariant broke; this indicates a bug or a bad precondition."""


class ParseError(InvalidInput, ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
