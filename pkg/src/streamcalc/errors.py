"""Exception hierarchy shared by all streamcalc modules."""


class StreamCalcError(Exception):
    """Base class for all domain errors raised by this package."""


class FieldMismatch(StreamCalcError):
    """Operands belong to different scalar fields."""


class NotInvertibleAtZero(StreamCalcError):
    """A stream whose initial value is 0 has no multiplicative inverse."""


class ZeroInitialValue(StreamCalcError):
    """Prefix-stream inversion requires a nonzero head coefficient."""


class ShapeMismatch(StreamCalcError):
    """Matrix or vector dimensions do not conform."""


class SingularMatrix(StreamCalcError):
    """Inversion of a matrix with zero determinant."""


class DimensionMismatch(StreamCalcError):
    """A conversion requires dimensions the argument does not have."""


class UnsupportedInitialVector(StreamCalcError):
    """The construction requires a standard-basis initial vector."""


class IllFormedCircuit(StreamCalcError):
    """Netlist violates well-formedness (dangling wire, combinational cycle)."""


class InsufficientPrefix(StreamCalcError):
    """Not enough stream coefficients for the requested analysis."""


class ParseError(StreamCalcError):
    """Syntax error in the expression language, with byte offset."""

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = frozenset(expected)
        detail = f"{message} at offset {position}"
        if self.expected:
            detail += " (expected " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(detail)


class FormatError(StreamCalcError):
    """Malformed scalar, matrix, or file content."""
