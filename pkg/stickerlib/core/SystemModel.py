"""This module contains the labeled automaton of a system under check,
its runs and the words emitted along them"""

# For type annotation
from __future__ import annotations
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from stickerlib.core.Errors import AlphabetError, InvalidRunError
from stickerlib.core.Logic import Letter, Valuation
from stickerlib.core.Utils import sortedStates, stateSortKey


class Violation:
    """One broken model invariant"""

    INITIAL = "initial"
    EDGE = "edge"
    LABELING = "labeling"
    VALUATION = "valuation"
    DUPLICATE = "duplicate-state"

    def __init__(self, kind: str, subject: Any, message: str):
        self.kind = kind
        self.subject = subject
        self.message = message

    def __eq__(self, other) -> bool:
        if isinstance(other, Violation):
            return (self.kind, self.subject, self.message) == (other.kind, other.subject, other.message)
        return False

    def __str__(self) -> str:
        return self.message

    def __repr__(self) -> str:
        return "Violation(" + self.kind + ", " + repr(self.subject) + ")"


class SystemModel:
    """Labeled finite state automaton (LFSA): atomic propositions are
    satisfied in states, not on transitions"""

    def __init__(
        self,
        name: str,
        states: Iterable[Any],
        initial: Any,
        edges: Iterable[Tuple[Any, Any]],
        labeling: Mapping[Any, Valuation],
    ):
        """:class:`SystemModel` constructor. The model is not validated
        here, see :func:`validate_model`.

        :param name: model name
        :param states: state identifiers
        :param initial: initial state
        :param edges: ordered state pairs
        :param labeling: valuation of each state
        """
        self.name = name
        self.__declared = list(states)
        self.STATES = tuple(sortedStates(set(self.__declared)))
        self.initial = initial
        self.EDGES = tuple(sorted(set(edges), key=lambda e: (stateSortKey(e[0]), stateSortKey(e[1]))))
        self.LABELING = dict(labeling)

        self.NEXT_STATES = dict()
        for (source, target) in self.EDGES:
            self.NEXT_STATES.setdefault(source, []).append(target)

    def declaredStates(self) -> list:
        return list(self.__declared)

    def numberOfStates(self) -> int:
        return len(self.STATES)

    def numberOfEdges(self) -> int:
        return len(self.EDGES)

    def hasEdge(self, source: Any, target: Any) -> bool:
        return target in self.NEXT_STATES.get(source, [])

    def getSuccessors(self, state: Any) -> list:
        """Successors of a state in ascending identifier order"""
        return list(self.NEXT_STATES.get(state, []))

    def valuation(self, state: Any) -> Valuation:
        if state not in self.LABELING:
            raise AlphabetError("state " + str(state) + " has no valuation")
        return self.LABELING[state]

    def propositions(self) -> frozenset:
        props = set()
        for v in self.LABELING.values():
            props |= v.propositions()
        return frozenset(props)

    def __str__(self) -> str:
        return (
            "SystemModel " + str(self.name) + ": "
            + str(self.numberOfStates()) + " states, "
            + str(self.numberOfEdges()) + " edges, init " + str(self.initial)
        )


def validate_model(model: SystemModel) -> List[Violation]:
    """Every violated model invariant, with the offending state or edge

    :param model: model to check
    :return: empty list iff the model is well formed
    """
    report = []
    states = set(model.STATES)

    seen = set()
    for s in model.declaredStates():
        if s in seen:
            report.append(Violation(Violation.DUPLICATE, s, "duplicate state " + str(s)))
        seen.add(s)

    if model.initial not in states:
        report.append(
            Violation(Violation.INITIAL, model.initial, "initial state " + str(model.initial) + " is not a state")
        )

    for (source, target) in model.EDGES:
        for end in (source, target):
            if end not in states:
                report.append(
                    Violation(
                        Violation.EDGE,
                        (source, target),
                        "edge " + str(source) + "->" + str(target) + " uses undeclared state " + str(end),
                    )
                )
                break

    for s in model.STATES:
        if s not in model.LABELING:
            report.append(Violation(Violation.LABELING, s, "state " + str(s) + " has no label"))
    for s in model.LABELING:
        if s not in states:
            report.append(Violation(Violation.LABELING, s, "label of undeclared state " + str(s)))

    props = model.propositions()
    for s in model.STATES:
        if s in model.LABELING:
            missing = props - model.LABELING[s].propositions()
            if missing:
                report.append(
                    Violation(
                        Violation.VALUATION,
                        s,
                        "valuation of state " + str(s) + " misses " + ", ".join(sorted(missing)),
                    )
                )

    return report


class RunPath:
    """Finite run of a system model, from its initial state"""

    def __init__(self, stateSequence: Sequence[Any], model: Optional[SystemModel] = None):
        """:class:`RunPath` constructor

        :param stateSequence: visited states
        :param model: when given, the sequence is checked against it
        """
        self.stateSequence = tuple(stateSequence)
        if len(self.stateSequence) == 0:
            raise InvalidRunError("a run visits at least one state")
        if model is not None:
            if self.stateSequence[0] != model.initial:
                raise InvalidRunError(
                    "run " + str(self) + " does not start at the initial state " + str(model.initial)
                )
            for i in range(len(self.stateSequence) - 1):
                source, target = self.stateSequence[i], self.stateSequence[i + 1]
                if not model.hasEdge(source, target):
                    raise InvalidRunError(
                        "run " + str(self) + " uses " + str(source) + "->" + str(target) + " which is not an edge"
                    )

    def valuations(self, model: SystemModel) -> List[Valuation]:
        """Valuation sequence read along the run"""
        return [model.valuation(s) for s in self.stateSequence]

    def size(self) -> int:
        return len(self.stateSequence)

    def __len__(self) -> int:
        return len(self.stateSequence)

    def __iter__(self) -> Iterator[Any]:
        yield from self.stateSequence

    def __getitem__(self, i):
        return self.stateSequence[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, RunPath):
            return self.stateSequence == other.stateSequence
        return False

    def __hash__(self) -> int:
        return hash(self.stateSequence)

    def __str__(self) -> str:
        return "(" + ",".join(str(s) for s in self.stateSequence) + ")"

    def __repr__(self) -> str:
        return "RunPath" + str(self)


class Word:
    """Finite sequence of letters, possibly empty"""

    def __init__(self, letters: Iterable[Letter] = (), alphabet: Optional[Iterable[Letter]] = None):
        self.letters = tuple(letters)
        if alphabet is not None:
            alphabet = frozenset(alphabet)
            for a in self.letters:
                if a not in alphabet:
                    raise AlphabetError("letter " + repr(a) + " is not in the alphabet")

    @staticmethod
    def fromNames(names: Iterable[str], alphabet: Iterable[Letter]) -> Word:
        """Word from letter names, resolved in an alphabet"""
        byName: Dict[str, Letter] = {a.name: a for a in alphabet}
        letters = []
        for n in names:
            if n not in byName:
                raise AlphabetError("unknown letter '" + n + "'")
            letters.append(byName[n])
        return Word(letters)

    def names(self) -> List[str]:
        return [a.name for a in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        yield from self.letters

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.letters == other.letters
        return False

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        return ",".join(self.names())

    def __repr__(self) -> str:
        return "Word[" + str(self) + "]"
