"""This module contains the class to manage the (possibly
nondeterministic) finite state automaton of a formula"""

# For type annotation
from __future__ import annotations
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

from stickerlib.core.Errors import AlphabetError, AutomatonError
from stickerlib.core.Logic import Letter, checkAlphabet


class FormulaFsa:
    """Finite state automaton over named letters. The transition map
    sends (state, letter) to a set of successor states."""

    def __init__(
        self,
        alphabet: Iterable[Letter],
        states: Iterable[Any],
        transitions: Mapping[Tuple[Any, Letter], Iterable[Any]],
        initial: Any,
        accepting: Iterable[Any],
        stateIndex: Optional[Mapping[Any, int]] = None,
        name: str = "",
    ):
        """:class:`FormulaFsa` constructor

        :param alphabet: letters read by the automaton
        :param states: states, listed in index order when no stateIndex is given
        :param transitions: (state, letter) -> successor states
        :param initial: initial state
        :param accepting: accepting states
        :param stateIndex: bijection from states to 0..n-1
        :param name: display name
        """
        self.name = name
        self.alphabet = checkAlphabet(alphabet)
        self.states = tuple(states)
        if len(set(self.states)) != len(self.states):
            raise AutomatonError("duplicate automaton state")
        self.initial = initial
        self.accepting = frozenset(accepting)
        self.transitions: Dict[Tuple[Any, Letter], frozenset] = {}
        for (source, letter), targets in transitions.items():
            targets = frozenset(targets)
            if targets:
                self.transitions[(source, letter)] = targets

        if stateIndex is None:
            stateIndex = {s: i for i, s in enumerate(self.states)}
        self.stateIndex = dict(stateIndex)
        self.__byIndex = {i: s for s, i in self.stateIndex.items()}
        self.__byName = {a.name: a for a in self.alphabet}

        self.__check()

    def __check(self):
        states = set(self.states)
        if self.initial not in states:
            raise AutomatonError("initial state " + str(self.initial) + " is not a state")
        if not self.accepting <= states:
            raise AutomatonError("accepting states must be states")
        for (source, letter), targets in self.transitions.items():
            if source not in states or not targets <= states:
                raise AutomatonError("transition endpoints must be states")
            if letter not in self.alphabet:
                raise AlphabetError("transition letter " + repr(letter) + " is not in the alphabet")
        if set(self.stateIndex) != states or sorted(self.stateIndex.values()) != list(range(len(states))):
            raise AutomatonError("state index must be a bijection onto 0.." + str(len(states) - 1))

    # -------------------------------------------------------------------------
    #  Accessors
    # -------------------------------------------------------------------------
    def numberOfStates(self) -> int:
        return len(self.states)

    def numberOfTransitions(self) -> int:
        return sum(len(targets) for targets in self.transitions.values())

    def index(self, state: Any) -> int:
        return self.stateIndex[state]

    def stateAt(self, i: int) -> Any:
        return self.__byIndex[i]

    def letter(self, name: str) -> Letter:
        """Alphabet letter by name"""
        if name not in self.__byName:
            raise AlphabetError("unknown letter '" + name + "'")
        return self.__byName[name]

    def sortedAlphabet(self) -> List[Letter]:
        return sorted(self.alphabet)

    def successors(self, state: Any, letter: Letter) -> frozenset:
        return self.transitions.get((state, letter), frozenset())

    def step(self, current: Iterable[Any], letters: Iterable[Letter]) -> frozenset:
        """States reachable from a set of states by reading one of the
        given letters"""
        letters = list(letters)
        reached = set()
        for s in current:
            for a in letters:
                reached |= self.successors(s, a)
        return frozenset(reached)

    def getTransitions(self) -> List[Tuple[Any, Letter, Any]]:
        """Every edge (source, letter, target), ordered by source index,
        target index, then letter name"""
        edges = []
        for (source, letter), targets in self.transitions.items():
            for target in targets:
                edges.append((source, letter, target))
        edges.sort(key=lambda t: (self.index(t[0]), self.index(t[2]), t[1].name))
        return edges

    # -------------------------------------------------------------------------
    #  Comparison and display
    # -------------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, FormulaFsa):
            return (
                self.alphabet == other.alphabet
                and set(self.states) == set(other.states)
                and self.transitions == other.transitions
                and self.initial == other.initial
                and self.accepting == other.accepting
                and self.stateIndex == other.stateIndex
            )
        return False

    def __hash__(self) -> int:
        return hash((self.alphabet, self.states, self.initial, self.accepting, frozenset(self.transitions.items())))

    def __str__(self) -> str:
        out = "FormulaFsa " + self.name + " (" + str(self.numberOfStates()) + " states)\n"
        out += "  alphabet: " + " ".join(repr(a) for a in self.sortedAlphabet()) + "\n"
        out += "  init: " + str(self.initial) + "\n"
        out += "  accepting: " + " ".join(str(s) for s in sorted(self.accepting, key=self.index)) + "\n"
        for (source, letter, target) in self.getTransitions():
            out += "  " + str(source) + " -" + letter.name + "-> " + str(target) + "\n"
        return out
