"""
Abstract hybridization: a class-I strand forms a complete duplex with
a class-II library when it can be cut into consecutive regions, each
paired by one library strand: the initial-state strand first, then
transition strands, an acceptance strand last. Library strands are
reusable.

Tilings are searched by a sweep over strand offsets. The same sweep
runs on a strand lattice, where the letter slot of a run state holds
every code the state may emit, so that the emission choice is made
while tiling.
"""

# For type annotation
from __future__ import annotations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import bisect
import heapq
import itertools
import logging
from collections import Counter

import numpy as np
import matplotlib.pyplot as plt

from stickerlib.core.CodeTable import ACCEPTANCE, INIT, TRANSITION, ClassIILibrary, CodeTable
from stickerlib.core.Errors import TilingError
from stickerlib.core.FormulaFsa import FormulaFsa
from stickerlib.core.Logic import Letter, Valuation, emittable_letters
from stickerlib.core.Strand import FIVE_TO_THREE, DnaStrand
from stickerlib.core.SystemModel import Word

logger = logging.getLogger(__name__)

ACCEPTED = "Accepted"
REJECTED = "Rejected"

# Plot styling
PAIRED_COLORS = ["tab:blue", "tab:green", "tab:orange", "tab:purple"]
UNPAIRED_COLOR = "red"


class Segment:
    """Region [start, end) of the class-I strand paired by a library strand"""

    def __init__(self, strandName: str, start: int, end: int):
        self.strandName = strandName
        self.start = start
        self.end = end

    def size(self) -> int:
        return self.end - self.start

    def asTuple(self) -> Tuple[str, int, int]:
        return (self.strandName, self.start, self.end)

    def __eq__(self, other) -> bool:
        if isinstance(other, Segment):
            return self.asTuple() == other.asTuple()
        if isinstance(other, tuple):
            return self.asTuple() == other
        return False

    def __hash__(self) -> int:
        return hash(self.asTuple())

    def __str__(self) -> str:
        return self.strandName + "[" + str(self.start) + ":" + str(self.end) + "]"

    def __repr__(self) -> str:
        return "Segment(" + str(self) + ")"


class TilingResult:
    """Outcome of a tiling. An incomplete result holds a maximal prefix
    cover and the range left unpaired."""

    def __init__(
        self,
        complete: bool,
        cover: List[Segment],
        uncoveredRanges: List[Tuple[int, int]],
        length: int,
        library: ClassIILibrary,
    ):
        self.complete = complete
        self.cover = cover
        self.uncoveredRanges = uncoveredRanges
        self.length = length
        self.library = library
        self.multiplicity: Dict[str, int] = dict(Counter(s.strandName for s in cover))

    def names(self) -> List[str]:
        return [s.strandName for s in self.cover]

    def asDict(self) -> dict:
        return {
            "complete": self.complete,
            "length": self.length,
            "cover": [list(s.asTuple()) for s in self.cover],
            "uncovered": [list(r) for r in self.uncoveredRanges],
            "multiplicity": dict(sorted(self.multiplicity.items())),
        }

    def __str__(self) -> str:
        out = ("complete" if self.complete else "incomplete") + ": "
        out += " ".join(str(s) for s in self.cover)
        if self.uncoveredRanges:
            out += " unpaired " + ", ".join(str(a) + "-" + str(b) for (a, b) in self.uncoveredRanges)
        return out


class Slot:
    """Strand region with alternative contents (one option: fixed bases)"""

    def __init__(self, start: int, length: int, options: Sequence[str]):
        self.start = start
        self.end = start + length
        self.options = frozenset(options)
        self.fixed = next(iter(self.options)) if len(self.options) == 1 else None


class StrandLattice:
    """Class-I strand whose letter slots may hold several codes"""

    def __init__(self, slots: List[Slot]):
        self.slots = slots
        self.starts = [s.start for s in slots]
        self.length = slots[-1].end if slots else 0

    @staticmethod
    def fromStrand(strand: DnaStrand) -> StrandLattice:
        return StrandLattice([Slot(0, len(strand.bases), [strand.bases])])

    @staticmethod
    def fromTrace(valuations: Sequence[Valuation], alphabet: Iterable[Letter], ct: CodeTable) -> StrandLattice:
        """Lattice of every class-I strand a valuation sequence can emit"""
        alphabet = list(alphabet)
        slots = []
        pos = 0
        fixed = ct.initiator + ct.block()
        for v in valuations:
            slots.append(Slot(pos, len(fixed), [fixed]))
            pos += len(fixed)
            codes = [ct.code(a) for a in emittable_letters(v, alphabet)]
            slots.append(Slot(pos, ct.codeLength(), codes))
            pos += ct.codeLength()
            fixed = ct.block()
        fixed += ct.terminator
        slots.append(Slot(pos, len(fixed), [fixed]))
        return StrandLattice(slots)

    def matchesAt(self, target: str, offset: int) -> bool:
        """True if the sequence pairs with the region starting at offset;
        a multi-option slot must lie inside the region"""
        end = offset + len(target)
        if end > self.length:
            return False
        k = bisect.bisect_right(self.starts, offset) - 1
        while k < len(self.slots) and self.slots[k].start < end:
            slot = self.slots[k]
            if slot.fixed is not None:
                a, b = max(slot.start, offset), min(slot.end, end)
                if target[a - offset : b - offset] != slot.fixed[a - slot.start : b - slot.start]:
                    return False
            else:
                if slot.start < offset or slot.end > end:
                    return False
                if target[slot.start - offset : slot.end - offset] not in slot.options:
                    return False
            k += 1
        return True


def tile_lattice(lattice: StrandLattice, lib: ClassIILibrary) -> TilingResult:
    """Tiling sweep over the offsets reachable from the initial strand"""
    L = lattice.length
    initName = lib.initialStrand.label
    transitions = lib.transitionNames()
    accepting = lib.acceptanceNames()
    rank = {name: i for i, name in enumerate(lib.names())}

    initTarget = lib.target(initName)
    if not lattice.matchesAt(initTarget, 0):
        return TilingResult(False, [], [(0, L)], L, lib)
    start = len(initTarget)

    # forward: moves available at every reachable offset
    moves: Dict[int, List[Tuple[int, str, int, bool]]] = {}
    pending = [start]
    seen = {start}
    while pending:
        o = heapq.heappop(pending)
        moves[o] = []
        for name in transitions:
            target = lib.target(name)
            if lattice.matchesAt(target, o):
                e = o + len(target)
                moves[o].append((rank[name], name, e, False))
                if e not in seen:
                    seen.add(e)
                    heapq.heappush(pending, e)
        for name in accepting:
            target = lib.target(name)
            if o + len(target) == L and lattice.matchesAt(target, o):
                moves[o].append((rank[name], name, L, True))

    # backward: offsets from which an acceptance strand closes the duplex
    canFinish = np.zeros(L + 1, dtype=bool)
    for o in sorted(moves, reverse=True):
        canFinish[o] = any(final or canFinish[e] for (_, _, e, final) in moves[o])

    cover = [Segment(initName, 0, start)]
    if canFinish[start]:
        o = start
        while True:
            r, name, e, final = min(m for m in moves[o] if m[3] or canFinish[m[2]])
            cover.append(Segment(name, o, e))
            if final:
                break
            o = e
        return TilingResult(True, cover, [], L, lib)

    # maximal prefix cover made of transition strands
    f = max(moves)
    reachF = np.zeros(L + 1, dtype=bool)
    reachF[f] = True
    for o in sorted(moves, reverse=True):
        if o != f:
            reachF[o] = any(reachF[e] for (_, _, e, final) in moves[o] if not final)
    o = start
    while o != f:
        r, name, e, final = min(m for m in moves[o] if not m[3] and reachF[m[2]])
        cover.append(Segment(name, o, e))
        o = e
    return TilingResult(False, cover, [(f, L)], L, lib)


def tile(classI: DnaStrand, lib: ClassIILibrary) -> TilingResult:
    """Lexicographically least complete tiling of a class-I strand, or a
    maximal prefix tiling when none exists

    :param classI: strand oriented 5'->3'
    :param lib: class-II library
    """
    if classI.orientation != FIVE_TO_THREE:
        raise TilingError("class-I strands are tiled 5'->3'")
    return tile_lattice(StrandLattice.fromStrand(classI), lib)


def tile_trace(valuations: Sequence[Valuation], lib: ClassIILibrary, ct: CodeTable, alphabet: Iterable[Letter]) -> TilingResult:
    """Tiling of a run with the emission choice folded into the sweep"""
    return tile_lattice(StrandLattice.fromTrace(valuations, alphabet, ct), lib)


def decode_tiling(t: TilingResult, a: FormulaFsa) -> list:
    """Automaton states spelled by a complete tiling

    :raise TilingError: the tiling is incomplete or inconsistent with a
    """
    if not t.complete:
        raise TilingError("only complete tilings spell an accepting run")
    states = []
    for segment in t.cover:
        kind, key = t.library.keyOf(segment.strandName)
        if kind == INIT:
            states.append(key)
        elif kind == TRANSITION:
            source, letter, target = key
            if states[-1] != source or target not in a.successors(source, letter):
                raise TilingError(segment.strandName + " does not continue the run")
            states.append(target)
        elif key != states[-1] or key not in a.accepting:
            raise TilingError(segment.strandName + " does not close the run")
    if states[0] != a.initial:
        raise TilingError("tiling does not start at the initial state")
    return states


def tiling_word(t: TilingResult) -> Word:
    """Letters read by the transition strands of a tiling"""
    letters = []
    for segment in t.cover:
        kind, key = t.library.keyOf(segment.strandName)
        if kind == TRANSITION:
            letters.append(key[1])
    return Word(letters)


def enumerate_groups(classI: DnaStrand, lib: ClassIILibrary, groupSize: int) -> List[Tuple[Tuple[str, ...], TilingResult]]:
    """Tile the strand with every group of groupSize transition strands
    (plus the initial and acceptance strands), groups in library order

    :raise TilingError: groupSize is negative or exceeds the library
    """
    names = lib.transitionNames()
    if groupSize < 0 or groupSize > len(names):
        raise TilingError(
            "group size " + str(groupSize) + " is not in 0.." + str(len(names))
        )
    out = []
    for group in itertools.combinations(names, groupSize):
        result = tile(classI, lib.restrictedTo(group))
        logger.debug("group %s: %s", ",".join(group), "complete" if result.complete else "incomplete")
        out.append((group, result))
    return out


def readout(t: TilingResult) -> str:
    """ACCEPTED iff the duplex is complete"""
    return ACCEPTED if t.complete else REJECTED


def plotTiling(t: TilingResult, strand: Optional[DnaStrand] = None, ax=None):
    """Plot the paired regions of a class-I strand and its unpaired bases

    :param t: tiling result
    :param strand: class-I strand, to print its bases
    :param ax: matplotlib axes (a new figure when None)
    :return: the axes
    """
    if ax is None:
        fig, ax = plt.subplots(figsize=(max(6, t.length / 8), 2.2))
    ax.plot([0, t.length], [0, 0], "k-", linewidth=2)
    for i, segment in enumerate(t.cover):
        color = PAIRED_COLORS[i % len(PAIRED_COLORS)]
        ax.add_patch(
            plt.Rectangle((segment.start, 0.1), segment.size(), 0.5, color=color, alpha=0.7)
        )
        ax.text(segment.start + segment.size() / 2, 0.75, segment.strandName, ha="center", fontsize=7)
    for (a, b) in t.uncoveredRanges:
        xs = np.arange(a, b) + 0.5
        ax.plot(xs, np.full(len(xs), 0.35), ".", color=UNPAIRED_COLOR)
    if strand is not None:
        for i, base in enumerate(strand.bases):
            ax.text(i + 0.5, -0.3, base, ha="center", fontsize=5, family="monospace")
    ax.set_xlim(0, max(t.length, 1))
    ax.set_ylim(-0.6, 1.1)
    ax.set_yticks([])
    ax.set_xlabel("offset (5'->3')")
    ax.set_title(("complete" if t.complete else "incomplete") + " duplex")
    return ax
