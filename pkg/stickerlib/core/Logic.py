"""
This module contains the propositional layer: literals over atomic
propositions, total valuations of a state and the named letters a
formula automaton reads.
"""

# For type annotation
from __future__ import annotations
from typing import Dict, Iterable, Iterator, Mapping, Optional

from stickerlib.core.Errors import AlphabetError, InvalidLetterError


class Literal:
    """An atomic proposition or its negation"""

    def __init__(self, prop: str, negated: bool = False):
        """:class:`Literal` constructor

        :param prop: atomic proposition name
        :param negated: True for the negative literal
        """
        if not prop:
            raise InvalidLetterError("empty proposition name")
        self.prop = prop
        self.negated = bool(negated)

    def negate(self) -> Literal:
        """Complementary literal (negating a negative literal cancels)"""
        return Literal(self.prop, not self.negated)

    def positive(self) -> Literal:
        return Literal(self.prop, False)

    def holds(self, valuation: Valuation) -> bool:
        """Evaluate the literal in a valuation

        :param valuation: a total valuation
        :return: truth value of the literal
        """
        return valuation[self.prop] != self.negated

    def sortKey(self) -> tuple:
        return (self.prop, self.negated)

    def __eq__(self, other) -> bool:
        if isinstance(other, Literal):
            return self.prop == other.prop and self.negated == other.negated
        return False

    def __hash__(self) -> int:
        return hash((self.prop, self.negated))

    def __str__(self) -> str:
        return ("!" if self.negated else "") + self.prop

    def __repr__(self) -> str:
        return "Literal(" + str(self) + ")"


class Valuation:
    """Immutable total assignment of truth values to atomic propositions"""

    def __init__(self, assignments: Optional[Mapping[str, bool]] = None):
        self.__values = {k: bool(v) for k, v in (assignments or {}).items()}

    def __getitem__(self, prop: str) -> bool:
        if prop not in self.__values:
            raise AlphabetError("proposition '" + prop + "' is not valued")
        return self.__values[prop]

    def __contains__(self, prop: str) -> bool:
        return prop in self.__values

    def __iter__(self) -> Iterator[str]:
        yield from sorted(self.__values)

    def __len__(self) -> int:
        return len(self.__values)

    def propositions(self) -> frozenset:
        return frozenset(self.__values)

    def trueProps(self) -> list:
        return [p for p in self if self.__values[p]]

    def asDict(self) -> Dict[str, bool]:
        return dict(self.__values)

    def __eq__(self, other) -> bool:
        if isinstance(other, Valuation):
            return self.__values == other.__values
        return False

    def __hash__(self) -> int:
        return hash(frozenset(self.__values.items()))

    def __str__(self) -> str:
        return "{" + ", ".join(("" if self.__values[p] else "!") + p for p in self) + "}"

    def __repr__(self) -> str:
        return "Valuation" + str(self)


class Letter:
    """Named letter of a formula automaton alphabet, emitted by every
    state whose valuation satisfies its condition (a conjunction of
    literals)"""

    def __init__(self, name: str, condition: Iterable[Literal]):
        """:class:`Letter` constructor

        :param name: letter name, unique within an alphabet
        :param condition: literals of the conjunction
        """
        condition = set(condition)
        props = [lit.prop for lit in condition]
        if len(props) != len(set(props)):
            raise InvalidLetterError("letter '" + name + "' has a contradictory condition")
        if not name:
            raise InvalidLetterError("letter names must not be empty")
        self.name = name
        self.condition = tuple(sorted(condition, key=Literal.sortKey))

    def holds(self, valuation: Valuation) -> bool:
        # every literal is evaluated so that unvalued propositions raise
        values = [lit.holds(valuation) for lit in self.condition]
        return all(values)

    def propositions(self) -> frozenset:
        return frozenset(lit.prop for lit in self.condition)

    def conditionText(self) -> str:
        return "&".join(str(lit) for lit in self.condition)

    def __eq__(self, other) -> bool:
        if isinstance(other, Letter):
            return self.name == other.name and self.condition == other.condition
        return False

    def __lt__(self, other: Letter) -> bool:
        return (self.name, self.conditionKey()) < (other.name, other.conditionKey())

    def conditionKey(self) -> tuple:
        return tuple(lit.sortKey() for lit in self.condition)

    def __hash__(self) -> int:
        return hash((self.name, self.condition))

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return "Letter(" + self.name + "=[" + self.conditionText() + "])"


# Letter names of the reference code table, usable when every
# proposition of an alphabet is p or q
ALIASES = {
    (("p", False),): "p",
    (("q", False),): "q",
    (("p", True),): "r",
    (("q", True),): "s",
    (("p", True), ("q", True)): "u",
}
ALIAS_PROPS = frozenset(["p", "q"])


def makeLetter(literals: Iterable[Literal], aliases: bool = True) -> Optional[Letter]:
    """Letter named after its condition, or None when the condition is
    contradictory

    :param literals: literals of the condition (duplicates collapse)
    :param aliases: use the reference names p, q, r, s, u when possible
    """
    literals = set(literals)
    if len({lit.prop for lit in literals}) != len(literals):
        return None
    ordered = sorted(literals, key=Literal.sortKey)
    key = tuple(lit.sortKey() for lit in ordered)
    if aliases and key in ALIASES:
        return Letter(ALIASES[key], ordered)
    return Letter("&".join(str(lit) for lit in ordered), ordered)


def checkAlphabet(alphabet: Iterable[Letter]) -> frozenset:
    """Check that letter names are pairwise distinct

    :return: the alphabet as a frozenset
    """
    alphabet = frozenset(alphabet)
    names = [a.name for a in alphabet]
    if len(names) != len(set(names)):
        raise InvalidLetterError("distinct letters share a name in the alphabet")
    return alphabet


def emittable_letters(v: Valuation, alphabet: Iterable[Letter]) -> frozenset:
    """Letters of the alphabet a state with valuation v may emit

    :param v: valuation of the state
    :param alphabet: candidate letters
    :return: exactly the letters whose condition holds under v
    """
    return frozenset(a for a in alphabet if a.holds(v))
