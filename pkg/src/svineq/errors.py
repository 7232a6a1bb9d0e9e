"""Exception hierarchy shared by every svineq module."""

from typing import Any


class SvineqError(Exception):
    """Base class for all svineq errors.

    Every error carries a human-readable reason, which is also the string
    form of the exception.
    """

    def __init__(self, reason: str = "svineq error") -> None:
        """Initialize with an optional reason.

        Args:
            reason: Human-readable description of what went wrong.
        """
        self.reason = reason
        super().__init__(reason)


class DimensionError(SvineqError):
    """Shapes or lengths of operands do not agree."""


class IndexRangeError(SvineqError):
    """An index i or k lies outside the range an operation admits."""


class ShapeRuleError(SvineqError):
    """A square-only statement or operation received a rectangular matrix."""


class UnknownInequalityError(SvineqError):
    """The requested inequality id is not in the catalog."""


class InvariantError(SvineqError):
    """A value would violate the invariants of its type."""


class ConfigError(SvineqError):
    """A configuration object or environment setting is invalid."""


class ParseError(SvineqError):
    """Base class for matrix JSON parse failures."""


class MalformedJsonError(ParseError):
    """The text is not valid JSON or does not follow the matrix schema."""


class DataLengthError(ParseError):
    """The data array does not have `rows` rows of `cols` entries."""


class NonFiniteEntryError(ParseError):
    """An entry is NaN or infinite."""


class ImaginaryPartError(ParseError):
    """A real-field matrix carries an entry with a nonzero imaginary part."""


class NumericalError(SvineqError):
    """A numerical kernel failed to converge.

    Attributes:
        best: Best-so-far result when the failing routine has one, else None.
    """

    def __init__(self, reason: str = "numerical failure", best: Any = None) -> None:
        super().__init__(reason)
        self.best = best
