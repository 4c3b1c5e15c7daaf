"""
Read basic CTL constructs from text

Grammar::

    formula := ('A'|'E') atom 'U' atom
             | ('AF'|'AG'|'AX'|'EF'|'EG'|'EX') atom
    atom    := ['!'] identifier | '(' atom ')'
"""

# For type annotation
from __future__ import annotations

from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from stickerlib.core.Errors import FormulaSyntaxError, NestedFormulaError
from stickerlib.core.Formula import CtlConstruct
from stickerlib.core.Logic import Literal

GRAMMAR = r"""
start: formula

formula: QUANT atom "U" atom   -> binary
       | UNARY atom            -> unary

atom: NEG? NAME                -> literal
    | "(" atom ")"
    | "(" formula ")"          -> nested

UNARY.3: /[AE][FGX]/
QUANT.2: "A" | "E"
NEG: "!"
NAME: /[a-z][a-z0-9_]*/

%import common.WS
%ignore WS
"""

_PARSER = Lark(GRAMMAR, parser="lalr", start="start")


class _ConstructBuilder(Transformer):
    def literal(self, items):
        return Literal(str(items[-1]), len(items) == 2)

    def atom(self, items):
        return items[0]

    def nested(self, items):
        raise NestedFormulaError("nested constructs unsupported")

    def binary(self, items):
        quantifier, p, q = items
        return CtlConstruct(str(quantifier) + "U", p, q)

    def unary(self, items):
        kind, p = items
        return CtlConstruct(str(kind), p)

    def start(self, items):
        return items[0]


def parse_formula(text: str) -> CtlConstruct:
    """Parse one basic construct ("A p U q", "EG !p"...)

    :raise FormulaSyntaxError: malformed input, with its column
    :raise NestedFormulaError: a construct used as an atom
    """
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as e:
        column = getattr(e, "column", None)
        if column is None or column < 1:
            column = len(text) + 1
        raise FormulaSyntaxError("unexpected input in formula '" + text + "'", column=column) from None
    try:
        return _ConstructBuilder().transform(tree)
    except VisitError as e:
        raise e.orig_exc from None


def render_formula(c: CtlConstruct) -> str:
    """Text parse_formula reads back to the same construct"""
    return str(c)
