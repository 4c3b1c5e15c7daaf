"""This module contains the classes to manage enumerated runs and
model-checking verdicts"""

# For type annotation
from __future__ import annotations
from typing import Iterator, List, Optional, Tuple

from stickerlib.core.Errors import StickerError
from stickerlib.core.Formula import EXISTENTIAL, UNIVERSAL, CtlConstruct, Reduction, classify
from stickerlib.core.SystemModel import RunPath

YES = "yes"
NO = "no"


class RunCollection:
    """Ordered collection of runs, with a warning when the enumeration
    was cut short"""

    def __init__(self, RUNS: List[RunPath] = [], warning: Optional[str] = None):
        self.__RUNS = list(RUNS)
        self.warning = warning

    def addRun(self, run: RunPath):
        self.__RUNS.append(run)

    def size(self) -> int:
        return len(self.__RUNS)

    def getRuns(self) -> List[RunPath]:
        return self.__RUNS

    def getRun(self, i: int) -> RunPath:
        return self.__RUNS[i]

    def truncated(self) -> bool:
        return self.warning is not None

    def __len__(self) -> int:
        return len(self.__RUNS)

    def __getitem__(self, i):
        return self.__RUNS[i]

    def __iter__(self) -> Iterator[RunPath]:
        yield from self.__RUNS

    def __eq__(self, other) -> bool:
        if isinstance(other, RunCollection):
            return self.__RUNS == other.getRuns()
        if isinstance(other, list):
            return self.__RUNS == other
        return False


class Verdict:
    """Yes/no answer of a construct on a model, with per-run evidence.
    perRun holds the per-run decision of the checked obligation."""

    def __init__(
        self,
        answer: bool,
        construct: Optional[CtlConstruct],
        reduction: Optional[Reduction],
        bound: int,
        perRun: List[Tuple[RunPath, bool]],
        witness: Optional[RunPath] = None,
        warning: Optional[str] = None,
    ):
        self.answer = bool(answer)
        self.construct = construct
        self.reduction = reduction
        self.bound = bound
        self.perRun = list(perRun)
        self.witness = witness
        self.warning = warning

        if construct is not None and self.needsWitness() and witness is None:
            raise StickerError("verdict " + self.answerText() + " on " + str(construct) + " needs a witness run")

    @property
    def runsChecked(self) -> int:
        return len(self.perRun)

    def needsWitness(self) -> bool:
        kind = classify(self.construct)
        return (kind == UNIVERSAL and not self.answer) or (kind == EXISTENTIAL and self.answer)

    def answerText(self) -> str:
        return YES if self.answer else NO

    def __str__(self) -> str:
        out = str(self.construct) + ": " + self.answerText()
        out += " (" + str(self.runsChecked) + " runs, bound " + str(self.bound) + ")"
        if self.witness is not None:
            out += " witness " + str(self.witness)
        return out
