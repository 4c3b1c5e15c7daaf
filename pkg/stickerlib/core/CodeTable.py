"""
This module contains the sticker code table (initiator, terminator,
spacers X0..Xm and one code per letter) and the class-II strand library
encoding a formula automaton.
"""

# For type annotation
from __future__ import annotations
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from stickerlib.core.Errors import CodeTableError, EncodingError
from stickerlib.core.Logic import Letter, Literal, makeLetter
from stickerlib.core.Strand import DnaStrand, checkBases, reverse_complement

INITIATOR = "I1"
TERMINATOR = "I2"

# Strand kinds of a class-II library
INIT = "init"
TRANSITION = "transition"
ACCEPTANCE = "acceptance"


class CodeTable:
    """Codes of the sticker scheme. Letters are keyed by name."""

    def __init__(
        self,
        initiator: str,
        terminator: str,
        spacers: Iterable[str],
        letterCodes: Mapping[Union[Letter, str], str],
    ):
        """:class:`CodeTable` constructor

        :param initiator: I1, read 5'->3'
        :param terminator: I2, read 5'->3'
        :param spacers: X0..Xm, read 5'->3'
        :param letterCodes: letter (or letter name) -> code
        """
        self.initiator = checkBases(initiator)
        self.terminator = checkBases(terminator)
        self.spacers = [checkBases(x) for x in spacers]
        self.letterCodes: Dict[str, str] = {}
        self.letters: Dict[str, Optional[Letter]] = {}
        for key, code in letterCodes.items():
            name = key.name if isinstance(key, Letter) else str(key)
            self.letterCodes[name] = checkBases(code)
            self.letters[name] = key if isinstance(key, Letter) else None

        problems = self.violations()
        if problems:
            raise CodeTableError(problems)

    @property
    def m(self) -> int:
        """Spacer upper index"""
        return len(self.spacers) - 1

    def violations(self) -> List[str]:
        report = []
        for label, code in [(INITIATOR, self.initiator), (TERMINATOR, self.terminator)]:
            if not code:
                report.append(label + " is empty")
        if not self.spacers:
            report.append("at least one spacer is required")
        for i, x in enumerate(self.spacers):
            if not x:
                report.append("X" + str(i) + " is empty")
        for name, code in self.letterCodes.items():
            if not code:
                report.append("code of letter " + name + " is empty")
        if len({len(x) for x in self.spacers}) > 1:
            report.append("spacers have different lengths")
        if len({len(c) for c in self.letterCodes.values()}) > 1:
            report.append("letter codes have different lengths")
        if len(set(self.spacers)) != len(self.spacers):
            report.append("spacers are not pairwise distinct")
        byCode: Dict[str, str] = {}
        for name in sorted(self.letterCodes):
            code = self.letterCodes[name]
            if code in byCode:
                report.append("letters " + byCode[code] + " and " + name + " share code " + code)
            byCode.setdefault(code, name)
            if code in self.spacers:
                report.append("code of letter " + name + " equals spacer X" + str(self.spacers.index(code)))
        return report

    # -------------------------------------------------------------------------
    #  Lookup
    # -------------------------------------------------------------------------
    def hasLetter(self, letter: Union[Letter, str]) -> bool:
        name = letter.name if isinstance(letter, Letter) else letter
        return name in self.letterCodes

    def code(self, letter: Union[Letter, str]) -> str:
        """Code of a letter

        :raise EncodingError: the letter is not coded
        """
        name = letter.name if isinstance(letter, Letter) else letter
        if name not in self.letterCodes:
            raise EncodingError("letter '" + name + "' has no code")
        return self.letterCodes[name]

    def letterNames(self) -> List[str]:
        return sorted(self.letterCodes)

    def letterByCode(self, code: str) -> Optional[str]:
        for name, c in self.letterCodes.items():
            if c == code:
                return name
        return None

    def codeLength(self) -> int:
        return len(next(iter(self.letterCodes.values()))) if self.letterCodes else 0

    def spacerLength(self) -> int:
        return len(self.spacers[0])

    def spacerRun(self, first: int, last: int) -> str:
        """X_first..X_last concatenated (empty when first > last)"""
        return "".join(self.spacers[first : last + 1])

    def block(self) -> str:
        """X0..Xm"""
        return self.spacerRun(0, self.m)

    def fragments(self) -> List[Tuple[str, str]]:
        """Every code element as (name, sequence): I1, I2, X0..Xm, then
        letters by name"""
        out = [(INITIATOR, self.initiator), (TERMINATOR, self.terminator)]
        out += [("X" + str(i), x) for i, x in enumerate(self.spacers)]
        out += [(name, self.letterCodes[name]) for name in self.letterNames()]
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, CodeTable):
            return (
                self.initiator == other.initiator
                and self.terminator == other.terminator
                and self.spacers == other.spacers
                and self.letterCodes == other.letterCodes
            )
        return False

    def __str__(self) -> str:
        return "\n".join(name + " " + seq for name, seq in self.fragments())


def tab3() -> CodeTable:
    """The shipped table for letters p, q, r=!p, s=!q, u=!p&!q and a
    3-state automaton"""
    p, q = Literal("p"), Literal("q")
    letters = {
        makeLetter([p]): "CGA",
        makeLetter([q]): "CCC",
        makeLetter([p.negate()]): "CGC",
        makeLetter([q.negate()]): "AGC",
        makeLetter([p.negate(), q.negate()]): "GCG",
    }
    return CodeTable("GCCA", "CGTC", ["GAA", "TTG", "CAA", "GGC"], letters)


class ClassIILibrary:
    """Class-II strands of a formula automaton: one initial-state
    strand, one strand per accepting state and one per transition edge.
    Strands are named init-s<i>, acc-s<j> and t<i><letter><j>."""

    def __init__(
        self,
        initialState: Any,
        initialStrand: DnaStrand,
        acceptanceStrands: Mapping[Any, DnaStrand],
        transitionStrands: Mapping[Tuple[Any, Letter, Any], DnaStrand],
        order: Optional[Iterable[Tuple[Any, Letter, Any]]] = None,
    ):
        self.initialState = initialState
        self.initialStrand = initialStrand
        self.acceptanceStrands = dict(acceptanceStrands)
        self.transitionStrands = dict(transitionStrands)
        self.order = list(order) if order is not None else list(self.transitionStrands)

        self.__byName: Dict[str, Tuple[str, Any]] = {initialStrand.label: (INIT, initialState)}
        for key in self.order:
            self.__register(self.transitionStrands[key].label, (TRANSITION, key))
        for state, strand in self.acceptanceStrands.items():
            self.__register(strand.label, (ACCEPTANCE, state))
        self.__targets: Dict[str, str] = {}

    def __register(self, name: str, key: Tuple[str, Any]):
        if name in self.__byName:
            raise EncodingError("two class-II strands are named " + name)
        self.__byName[name] = key

    def strands(self) -> List[DnaStrand]:
        """Initial strand, transitions in library order, acceptance strands"""
        out = [self.initialStrand]
        out += [self.transitionStrands[k] for k in self.order]
        out += [self.acceptanceStrands[s] for s in self.acceptanceStrands]
        return out

    def names(self) -> List[str]:
        return [s.label for s in self.strands()]

    def transitionNames(self) -> List[str]:
        return [self.transitionStrands[k].label for k in self.order]

    def acceptanceNames(self) -> List[str]:
        return [s.label for s in self.acceptanceStrands.values()]

    def keyOf(self, name: str) -> Tuple[str, Any]:
        """(INIT, state), (TRANSITION, (source, letter, target)) or
        (ACCEPTANCE, state)"""
        if name not in self.__byName:
            raise EncodingError("no class-II strand named " + name)
        return self.__byName[name]

    def strand(self, name: str) -> DnaStrand:
        kind, key = self.keyOf(name)
        if kind == INIT:
            return self.initialStrand
        if kind == TRANSITION:
            return self.transitionStrands[key]
        return self.acceptanceStrands[key]

    def target(self, name: str) -> str:
        """Class-I region (5'->3') a strand pairs with"""
        if name not in self.__targets:
            self.__targets[name] = reverse_complement(self.strand(name).bases)
        return self.__targets[name]

    def restrictedTo(self, transitionNames: Iterable[str]) -> ClassIILibrary:
        """Same initial and acceptance strands, only the given transitions"""
        keep = set(transitionNames)
        order = [k for k in self.order if self.transitionStrands[k].label in keep]
        return ClassIILibrary(
            self.initialState,
            self.initialStrand,
            self.acceptanceStrands,
            {k: self.transitionStrands[k] for k in order},
            order,
        )

    def size(self) -> int:
        return len(self.__byName)

    def __iter__(self):
        yield from self.strands()
