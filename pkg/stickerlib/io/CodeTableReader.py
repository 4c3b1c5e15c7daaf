"""
Read code tables

Line-oriented format, '#' starts a comment::

    I1 GCCA
    I2 CGTC
    X0 GAA            (X0..Xm, contiguous indices)
    code s AGC !q     (letter name, code, optional condition literals)
"""

# For type annotation
from __future__ import annotations
from typing import Dict, Optional

from stickerlib.core.CodeTable import INITIATOR, TERMINATOR, CodeTable, tab3
from stickerlib.core.Errors import CodeTableError, CodeTableSyntaxError, InvalidLetterError, StickerError
from stickerlib.core.Logic import Letter, Literal
from stickerlib.core.Utils import isIdentifier

# Name of the shipped table
TAB3 = "tab3"


def parse_code_table(text: str) -> CodeTable:
    """Parse a code table

    :raise CodeTableSyntaxError: malformed line, with its number
    :raise CodeTableError: the table breaks its invariants
    """
    initiator: Optional[str] = None
    terminator: Optional[str] = None
    spacers: Dict[int, str] = {}
    codes: Dict = {}
    names = set()

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].split()
        if not content:
            continue
        key, args = content[0], content[1:]

        if key in (INITIATOR, TERMINATOR):
            if len(args) != 1:
                raise CodeTableSyntaxError(key + " takes one sequence", number)
            if key == INITIATOR:
                initiator = args[0]
            else:
                terminator = args[0]
        elif key.startswith("X") and key[1:].isdigit():
            if len(args) != 1:
                raise CodeTableSyntaxError(key + " takes one sequence", number)
            index = int(key[1:])
            if index in spacers:
                raise CodeTableSyntaxError("spacer " + key + " given twice", number)
            spacers[index] = args[0]
        elif key == "code":
            if len(args) < 2:
                raise CodeTableSyntaxError("code takes a letter name and a sequence", number)
            name, sequence, literals = args[0], args[1], args[2:]
            if name in names:
                raise CodeTableSyntaxError("letter " + name + " coded twice", number)
            names.add(name)
            if literals:
                condition = []
                for token in literals:
                    negated = token.startswith("!")
                    prop = token[1:] if negated else token
                    if not isIdentifier(prop):
                        raise CodeTableSyntaxError("invalid literal '" + token + "'", number)
                    condition.append(Literal(prop, negated))
                try:
                    codes[Letter(name, condition)] = sequence
                except InvalidLetterError as e:
                    raise CodeTableSyntaxError(str(e), number) from None
            else:
                codes[name] = sequence
        else:
            raise CodeTableSyntaxError("unknown entry '" + key + "'", number)

    if initiator is None or terminator is None:
        raise CodeTableSyntaxError("both I1 and I2 are required")
    if sorted(spacers) != list(range(len(spacers))) or not spacers:
        raise CodeTableSyntaxError("spacers must be X0..Xm without gaps")

    try:
        return CodeTable(initiator, terminator, [spacers[i] for i in range(len(spacers))], codes)
    except CodeTableError:
        raise
    except StickerError as e:
        raise CodeTableSyntaxError(str(e)) from None


class CodeTableReader:
    @staticmethod
    def readFromFile(path: str) -> CodeTable:
        with open(path, encoding="utf-8") as f:
            return parse_code_table(f.read())


def load_table(source: str) -> CodeTable:
    """The shipped table for "tab3", a table file otherwise"""
    if source == TAB3:
        return tab3()
    return CodeTableReader.readFromFile(source)
