"""Exceptions raised by stickerlib"""

# For type annotation
from __future__ import annotations
from typing import Iterable, Optional


class StickerError(Exception):
    """Base class of every error raised by the library"""


class ParseError(StickerError):
    """Malformed text input

    :param message: diagnostic
    :param line: 1-based line number, when the input is line oriented
    :param column: 1-based column, when known
    """

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        where = []
        if self.line is not None:
            where.append("line " + str(self.line))
        if self.column is not None:
            where.append("column " + str(self.column))
        if where:
            return ", ".join(where) + ": " + self.message
        return self.message


class FormulaSyntaxError(ParseError):
    pass


class NestedFormulaError(FormulaSyntaxError):
    """Only the eight basic constructs are accepted"""


class ModelSyntaxError(ParseError):
    pass


class CodeTableSyntaxError(ParseError):
    pass


class ModelValidationError(StickerError):
    """A system model breaks its invariants

    :param violations: list of :class:`Violation`
    """

    def __init__(self, violations: Iterable):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class FormulaError(StickerError):
    """A construct or obligation built with an unknown kind or the
    wrong number of atoms"""


class InvalidRunError(StickerError):
    """A state sequence is not a run of the model"""


class InvalidLetterError(StickerError):
    """A letter condition is contradictory, or names collide in an alphabet"""


class AlphabetError(StickerError):
    """A letter or proposition is missing where it is required"""


class AutomatonError(StickerError):
    """A formula automaton breaks its invariants"""


class RelabelError(AutomatonError):
    pass


class CodeTableError(StickerError):
    """A code table breaks its invariants

    :param violations: list of diagnostics
    """

    def __init__(self, violations: Iterable[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class EncodingError(StickerError):
    pass


class DecodingError(StickerError):
    """A strand deviates from the class-I scheme

    :param message: diagnostic
    :param offset: 0-based offset of the first deviating base
    """

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__("offset " + str(offset) + ": " + message)


class CodeSearchError(StickerError):
    """The code table generator ran out of candidates"""


class TilingError(StickerError):
    pass


class BoundOverflowError(StickerError):
    pass


class ConstructClassError(StickerError):
    """A construct was routed to the wrong checking algorithm"""
