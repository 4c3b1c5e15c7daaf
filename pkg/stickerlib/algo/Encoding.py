"""
Sticker encoding of runs and formula automata

Class-I strand of a word a1..an (5'->3')::

    I1 X0..Xm C(a1) X0..Xm C(a2) ... C(an) X0..Xm I2

Class-II strands of an automaton with m states (written 3'->5')::

    initial s_i          wc(I1 X0..Xi)
    transition s_i -a-> s_j   wc(X(i+1)..Xm C(a) X0..Xj)
    accepting s_j        wc(X(j+1)..Xm I2)
"""

# For type annotation
from __future__ import annotations
from typing import Dict, Iterable, List, Optional, Tuple

import itertools
import logging
import random

from stickerlib.core.CodeTable import INITIATOR, TERMINATOR, ClassIILibrary, CodeTable
from stickerlib.core.Errors import CodeSearchError, DecodingError, EncodingError
from stickerlib.core.FormulaFsa import FormulaFsa
from stickerlib.core.Logic import Letter
from stickerlib.core.Strand import (
    BASES, FIVE_TO_THREE, BaseComposition, DnaStrand, reverse_complement, wc_complement,
)
from stickerlib.core.SystemModel import Word
from stickerlib.core.Utils import maxHomopolymer

logger = logging.getLogger(__name__)

# Candidates tried per code before the generator gives up
GENERATOR_MAX_CANDIDATES = 100000


# =============================================================================
#   Class-I strands
# =============================================================================
def encode_run(w: Word, ct: CodeTable, label: str = "class-I") -> DnaStrand:
    """Class-I strand of a word

    :raise EncodingError: a letter has no code
    """
    block = ct.block()
    parts = [ct.initiator, block]
    for letter in w:
        parts.append(ct.code(letter))
        parts.append(block)
    parts.append(ct.terminator)
    return DnaStrand("".join(parts), FIVE_TO_THREE, label)


def _mismatch(bases: str, offset: int, expected: str) -> int:
    """Length of the common prefix of bases[offset:] and expected"""
    n = 0
    while n < len(expected) and offset + n < len(bases) and bases[offset + n] == expected[n]:
        n += 1
    return n


def decode_run_strand(s: DnaStrand, ct: CodeTable, alphabet: Optional[Iterable[Letter]] = None) -> Word:
    """Strict inverse of :func:`encode_run`

    :param s: class-I strand, oriented 5'->3'
    :param ct: code table
    :param alphabet: letters to resolve names with (defaults to the table's)
    :raise DecodingError: at the first offset deviating from the scheme
    """
    if s.orientation != FIVE_TO_THREE:
        raise DecodingError("class-I strands are read 5'->3'", 0)
    bases = s.bases
    letters: Dict[str, Letter] = {}
    for name, letter in ct.letters.items():
        letters[name] = letter if letter is not None else Letter(name, ())
    if alphabet is not None:
        letters.update({a.name: a for a in alphabet})

    def expect(offset: int, piece: str, what: str) -> int:
        n = _mismatch(bases, offset, piece)
        if n < len(piece):
            raise DecodingError("expected " + what, offset + n)
        return offset + len(piece)

    block = ct.block()
    pos = expect(0, ct.initiator, INITIATOR)
    pos = expect(pos, block, "spacers X0..X" + str(ct.m))

    word = []
    while True:
        if bases[pos:] == ct.terminator:
            return Word(word)
        best = _mismatch(bases, pos, ct.terminator)
        found = None
        for name in ct.letterNames():
            code = ct.letterCodes[name]
            n = _mismatch(bases, pos, code)
            if n == len(code):
                found = name
                break
            best = max(best, n)
        if found is None:
            raise DecodingError("expected a letter code or " + TERMINATOR, pos + best)
        word.append(letters[found])
        pos += len(ct.letterCodes[found])
        pos = expect(pos, block, "spacers X0..X" + str(ct.m))


# =============================================================================
#   Class-II library
# =============================================================================
def transitionName(i: int, letter: Letter, j: int, compact: bool = True) -> str:
    if compact:
        return "t" + str(i) + letter.name + str(j)
    return "t" + str(i) + "_" + letter.name + "_" + str(j)


def encode_formula_fsa(a: FormulaFsa, ct: CodeTable) -> ClassIILibrary:
    """Class-II strands of an automaton

    :raise EncodingError: m differs from the state count, or a letter has no code
    """
    if ct.m != a.numberOfStates():
        raise EncodingError(
            "code table has spacers X0..X" + str(ct.m) + " but " + a.name
            + " has " + str(a.numberOfStates()) + " states"
        )
    for letter in a.sortedAlphabet():
        ct.code(letter)

    m = ct.m
    compact = a.numberOfStates() <= 10 and not any(ch.isdigit() for x in a.alphabet for ch in x.name)

    i0 = a.index(a.initial)
    initial = wc_complement(
        DnaStrand(ct.initiator + ct.spacerRun(0, i0)), label="init-s" + str(i0)
    )

    transitions = {}
    order = []
    for (source, letter, target) in a.getTransitions():
        i, j = a.index(source), a.index(target)
        region = ct.spacerRun(i + 1, m) + ct.code(letter) + ct.spacerRun(0, j)
        key = (source, letter, target)
        transitions[key] = wc_complement(DnaStrand(region), label=transitionName(i, letter, j, compact))
        order.append(key)

    acceptance = {}
    for state in sorted(a.accepting, key=a.index):
        j = a.index(state)
        acceptance[state] = wc_complement(
            DnaStrand(ct.spacerRun(j + 1, m) + ct.terminator), label="acc-s" + str(j)
        )

    logger.debug("encoded %s into %d class-II strands", a.name, 1 + len(order) + len(acceptance))
    return ClassIILibrary(a.initial, initial, acceptance, transitions, order)


# =============================================================================
#   Code table audit
# =============================================================================
class Hit:
    """Window of fragment `first` whose Watson-Crick partner occurs in
    fragment `second`"""

    def __init__(self, first: str, second: str, firstOffset: int, secondOffset: int, window: str):
        self.first = first
        self.second = second
        self.firstOffset = firstOffset
        self.secondOffset = secondOffset
        self.window = window

    def pair(self) -> Tuple[str, str]:
        return (self.first, self.second)

    def asDict(self) -> dict:
        return {
            "first": self.first,
            "second": self.second,
            "firstOffset": self.firstOffset,
            "secondOffset": self.secondOffset,
            "window": self.window,
        }

    def __str__(self) -> str:
        return (
            self.first + "[" + str(self.firstOffset) + "] " + self.window
            + " pairs with " + self.second + "[" + str(self.secondOffset) + "]"
        )


class AuditReport:
    """Cross-hybridization hits and per-strand composition of a code table"""

    def __init__(self, minHit: int, hits: List[Hit], fragments: List[Tuple[str, str]]):
        self.minHit = minHit
        self.hits = hits
        self.fragments = fragments
        self.composition = {name: BaseComposition(seq) for name, seq in fragments}
        self.homopolymer = {name: maxHomopolymer(seq) for name, seq in fragments}

    @property
    def passes(self) -> bool:
        return len(self.hits) == 0

    def pairs(self) -> List[Tuple[str, str]]:
        """Distinct offending ordered pairs, in fragment order"""
        out = []
        for h in self.hits:
            if h.pair() not in out:
                out.append(h.pair())
        return out

    def totalComposition(self) -> BaseComposition:
        total = BaseComposition("")
        for c in self.composition.values():
            total = total + c
        return total


def _hitsBetween(f: Tuple[str, str], g: Tuple[str, str], k: int) -> List[Hit]:
    (fname, fseq), (gname, gseq) = f, g
    hits = []
    for i in range(len(fseq) - k + 1):
        window = fseq[i : i + k]
        partner = reverse_complement(window)
        j = gseq.find(partner)
        while j >= 0:
            hits.append(Hit(fname, gname, i, j, window))
            j = gseq.find(partner, j + 1)
    return hits


def audit_code_table(ct: CodeTable, minHit: Optional[int] = None) -> AuditReport:
    """Complementary overlaps between distinct code elements

    For every ordered pair (f, g) of distinct elements (I1, I2, X0..Xm,
    letter codes), each window of f of length minHit whose reverse
    complement occurs in g is a hit. The table passes iff there is none.

    :param ct: code table
    :param minHit: window length, defaults to the letter code length
    """
    if minHit is None:
        minHit = ct.codeLength() or ct.spacerLength()
    if minHit < 1:
        raise EncodingError("minHit must be at least 1")
    fragments = ct.fragments()
    hits = []
    for f in fragments:
        for g in fragments:
            if f[0] != g[0]:
                hits += _hitsBetween(f, g, minHit)
    logger.debug("audit at minHit %d: %d hits", minHit, len(hits))
    return AuditReport(minHit, hits, fragments)


# =============================================================================
#   Code table generation
# =============================================================================
def _compatible(candidate: str, chosen: List[str], k: int) -> bool:
    if candidate in chosen or reverse_complement(candidate) == candidate:
        return False
    for other in chosen:
        if _hitsBetween(("c", candidate), ("o", other), k):
            return False
        if _hitsBetween(("o", other), ("c", candidate), k):
            return False
    return True


def _pick(rng: random.Random, length: int, chosen: List[str], k: int, what: str) -> str:
    pool = ["".join(t) for t in itertools.product(BASES, repeat=length)]
    rng.shuffle(pool)
    for candidate in pool[:GENERATOR_MAX_CANDIDATES]:
        if _compatible(candidate, chosen, k):
            chosen.append(candidate)
            return candidate
    raise CodeSearchError("no compatible code left for " + what)


def generate_code_table(
    alphabet: Iterable[Letter],
    fsaStateCount: int,
    codeLen: int,
    spacerLen: int,
    seed: int,
) -> CodeTable:
    """Seeded greedy search for a code table with spacers X0..X<fsaStateCount>

    Codes are drawn from shuffled pools: spacers first, then letters by
    name, then I1 and I2 (one base longer than the letter codes). A
    candidate is kept when no window of length min(codeLen, spacerLen)
    pairs with another chosen element.

    :raise CodeSearchError: too few codes exist, or the search runs dry
    """
    alphabet = sorted(alphabet)
    needed = len(alphabet) + fsaStateCount + 3
    if 4 ** codeLen < needed:
        raise CodeSearchError(
            "4^" + str(codeLen) + " codes cannot hold " + str(needed) + " distinct elements"
        )
    if 4 ** spacerLen < fsaStateCount + 1:
        raise CodeSearchError("spacer length " + str(spacerLen) + " is too short")

    k = min(codeLen, spacerLen)
    rng = random.Random(seed)
    chosen: List[str] = []
    spacers = [_pick(rng, spacerLen, chosen, k, "X" + str(i)) for i in range(fsaStateCount + 1)]
    codes = {letter: _pick(rng, codeLen, chosen, k, "letter " + letter.name) for letter in alphabet}
    initiator = _pick(rng, codeLen + 1, chosen, k, INITIATOR)
    terminator = _pick(rng, codeLen + 1, chosen, k, TERMINATOR)

    ct = CodeTable(initiator, terminator, spacers, codes)
    if not audit_code_table(ct, codeLen + 1).passes:
        raise CodeSearchError("generated table fails its audit")
    logger.info("generated code table (seed %d, %d letters, m=%d)", seed, len(alphabet), ct.m)
    return ct
