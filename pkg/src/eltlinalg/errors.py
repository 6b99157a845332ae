"""Exception hierarchy shared by all modules.

``EltError`` covers domain errors (singular input where a nonsingular one is
required, size bounds, ring capability mismatches).  ``ParseError`` is kept
separate so the command line can map it to a distinct exit code.
"""

from __future__ import annotations


class EltError(Exception):
    """Base class for domain errors."""


class NotSquare(EltError):
    pass


class SizeBound(EltError):
    pass


class DimensionMismatch(EltError):
    pass


class BadIndex(EltError):
    pass


class NotSquareSelection(EltError):
    pass


class NotAField(EltError):
    pass


class NotIntegralDomain(EltError):
    pass


class ZeroLayerNotInvertible(EltError):
    pass


class NotSingular(EltError):
    pass


class InvalidWitness(EltError):
    pass


class ZeroLayerEntry(EltError):
    pass


class NoConjugation(EltError):
    pass


class NotOrthonormal(EltError):
    pass


class NotOrthogonal(EltError):
    pass


class ParseError(Exception):
    """Raised on malformed textual input; carries line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}" + (f", col {column}" if column is not None else "") + f": {message}"
        super().__init__(message)
