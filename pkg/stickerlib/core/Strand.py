"""This module contains the class to manage oriented DNA strands"""

# For type annotation
from __future__ import annotations
from typing import Dict, Optional

import numpy as np

from stickerlib.core.Errors import EncodingError

BASES = "ACGT"
COMPLEMENT = str.maketrans("ACGT", "TGCA")

# Written directions
FIVE_TO_THREE = "5to3"
THREE_TO_FIVE = "3to5"


def reverse_complement(bases: str) -> str:
    """Reverse complement of a 5'->3' sequence, read 5'->3'"""
    return bases.translate(COMPLEMENT)[::-1]


def complement(bases: str) -> str:
    """Base-wise complement, same reading direction"""
    return bases.translate(COMPLEMENT)


def checkBases(bases: str) -> str:
    bases = bases.upper()
    for i, b in enumerate(bases):
        if b not in BASES:
            raise EncodingError("invalid base '" + b + "' at offset " + str(i))
    return bases


class DnaStrand:
    """Single DNA strand. Bases are stored 5'->3'; the orientation tag
    records the direction the strand is written in."""

    def __init__(self, bases: str, orientation: str = FIVE_TO_THREE, label: str = ""):
        """:class:`DnaStrand` constructor

        :param bases: sequence read 5'->3'
        :param orientation: FIVE_TO_THREE or THREE_TO_FIVE
        :param label: strand name
        """
        if orientation not in (FIVE_TO_THREE, THREE_TO_FIVE):
            raise EncodingError("unknown orientation " + str(orientation))
        self.bases = checkBases(bases)
        self.orientation = orientation
        self.label = label

    @staticmethod
    def fromWritten(text: str, orientation: str, label: str = "") -> DnaStrand:
        """Strand from its written form (3'->5' text is reversed)"""
        text = checkBases(text.strip())
        if orientation == THREE_TO_FIVE:
            text = text[::-1]
        return DnaStrand(text, orientation, label)

    def written(self) -> str:
        """Sequence in the written direction"""
        if self.orientation == THREE_TO_FIVE:
            return self.bases[::-1]
        return self.bases

    def size(self) -> int:
        return len(self.bases)

    def __len__(self) -> int:
        return len(self.bases)

    def composition(self) -> BaseComposition:
        return BaseComposition(self.bases)

    def __eq__(self, other) -> bool:
        if isinstance(other, DnaStrand):
            return (self.bases, self.orientation, self.label) == (other.bases, other.orientation, other.label)
        return False

    def __hash__(self) -> int:
        return hash((self.bases, self.orientation, self.label))

    def __str__(self) -> str:
        if self.orientation == THREE_TO_FIVE:
            return "3' " + self.written() + " 5'"
        return "5' " + self.written() + " 3'"

    def __repr__(self) -> str:
        return "DnaStrand(" + self.label + ": " + str(self) + ")"


def wc_complement(s: DnaStrand, label: Optional[str] = None) -> DnaStrand:
    """Watson-Crick complement: antiparallel partner of the strand.
    Written base-wise it is A<->T, C<->G with the orientation flipped.

    :param s: strand to pair
    :param label: label of the result (defaults to the source label)
    """
    orientation = THREE_TO_FIVE if s.orientation == FIVE_TO_THREE else FIVE_TO_THREE
    return DnaStrand(reverse_complement(s.bases), orientation, s.label if label is None else label)


class BaseComposition:
    """Counts of A, C, G and T in a sequence"""

    def __init__(self, bases: str):
        codes = np.frombuffer(bases.encode("ascii"), dtype=np.uint8)
        self.counts = np.array([np.count_nonzero(codes == ord(b)) for b in BASES], dtype=np.int64)

    def total(self) -> int:
        return int(self.counts.sum())

    def count(self, base: str) -> int:
        return int(self.counts[BASES.index(base)])

    def percentages(self) -> Dict[str, float]:
        total = self.total()
        if total == 0:
            return {b: 0.0 for b in BASES}
        ratios = 100.0 * self.counts / total
        return {b: float(round(ratios[i], 2)) for i, b in enumerate(BASES)}

    def gcContent(self) -> float:
        total = self.total()
        if total == 0:
            return 0.0
        return float(round(100.0 * (self.count("G") + self.count("C")) / total, 2))

    def __add__(self, other: BaseComposition) -> BaseComposition:
        result = BaseComposition("")
        result.counts = self.counts + other.counts
        return result

    def asDict(self) -> Dict[str, int]:
        return {b: self.count(b) for b in BASES}

    def __str__(self) -> str:
        pct = self.percentages()
        return " ".join(b + "=" + str(self.count(b)) + " (" + str(pct[b]) + "%)" for b in BASES)
