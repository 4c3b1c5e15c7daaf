"""
Model checking of the basic CTL constructs through the DNA layer

Runs are enumerated up to a bound on their number of states. Each run
is decided by tiling its class-I strand lattice with the class-II
library of the obligation's automaton. Universal constructs hold iff
every run is accepted. Existential constructs are checked on the
obligation of their negation and the answer is inverted.
"""

# For type annotation
from __future__ import annotations
from typing import List, Optional, Tuple

import functools
import logging

import progressbar

from stickerlib.algo.Automata import build_formula_fsa
from stickerlib.algo.Encoding import encode_formula_fsa, generate_code_table
from stickerlib.algo.Hybridization import tile_trace
from stickerlib.algo.Oracle import oracle_check
from stickerlib.core.CodeTable import ClassIILibrary, CodeTable, tab3
from stickerlib.core.Errors import BoundOverflowError, ConstructClassError, InvalidRunError, StickerError
from stickerlib.core.Formula import EXISTENTIAL, UNIVERSAL, CtlConstruct, LtlObligation, classify, reduce
from stickerlib.core.FormulaFsa import FormulaFsa
from stickerlib.core.SystemModel import RunPath, SystemModel
from stickerlib.core.Verdict import RunCollection, Verdict

logger = logging.getLogger(__name__)

# Enumeration stops after this many runs
RUN_CAP = 10 ** 6

# Largest bound compute_bound reports
MAX_BOUND = 2 ** 63 - 1

# Code table generated when the shipped one does not fit
DEFAULT_SEED = 0
CODE_LENGTH = 3
SPACER_LENGTH = 3


def compute_bound(model: SystemModel) -> int:
    """|V| * 2^(|V|-1) + |E|

    :raise BoundOverflowError: the bound exceeds MAX_BOUND
    """
    n = model.numberOfStates()
    if n == 0:
        return model.numberOfEdges()
    if n - 1 >= MAX_BOUND.bit_length():
        raise BoundOverflowError("bound overflows for " + str(n) + " states")
    bound = n * 2 ** (n - 1) + model.numberOfEdges()
    if bound > MAX_BOUND:
        raise BoundOverflowError("bound " + str(bound) + " exceeds " + str(MAX_BOUND))
    return bound


def enumerate_runs(model: SystemModel, L: int, verbose: bool = False) -> RunCollection:
    """Runs from the initial state that end in a state without
    successor, or are cut at exactly L states. Depth-first, successors
    in ascending identifier order.

    :param model: validated model
    :param L: maximal number of states per run
    :param verbose: show a progress bar
    """
    if L < 1:
        raise StickerError("runs are bounded by at least one state")
    runs = RunCollection()
    bar = progressbar.ProgressBar(max_value=progressbar.UnknownLength) if verbose else None

    stack = [(model.initial,)]
    while stack:
        path = stack.pop()
        successors = model.getSuccessors(path[-1])
        if len(path) == L or not successors:
            if runs.size() >= RUN_CAP:
                runs.warning = "run enumeration stopped at " + str(RUN_CAP) + " runs"
                logger.warning(runs.warning)
                break
            runs.addRun(RunPath(path))
            if bar is not None:
                bar.update(runs.size())
            continue
        for s in reversed(successors):
            stack.append(path + (s,))

    if bar is not None:
        bar.finish()
    logger.debug("%d runs of %s within %d states", runs.size(), model.name, L)
    return runs


class DnaSetup:
    """Automaton, code table and class-II library of an obligation"""

    def __init__(self, fsa: FormulaFsa, table: CodeTable, library: ClassIILibrary):
        self.fsa = fsa
        self.table = table
        self.library = library


def fitsTable(fsa: FormulaFsa, table: CodeTable) -> bool:
    return table.m == fsa.numberOfStates() and all(table.hasLetter(a) for a in fsa.alphabet)


@functools.lru_cache(maxsize=64)
def _defaultSetup(g: LtlObligation) -> DnaSetup:
    fsa = build_formula_fsa(g, closed=True)
    table = tab3()
    if fitsTable(fsa, table):
        logger.info("%s encoded with the shipped code table", fsa.name)
    else:
        table = generate_code_table(fsa.alphabet, fsa.numberOfStates(), CODE_LENGTH, SPACER_LENGTH, DEFAULT_SEED)
        logger.info("%s encoded with a generated code table", fsa.name)
    return DnaSetup(fsa, table, encode_formula_fsa(fsa, table))


def dna_setup(g: LtlObligation, table: Optional[CodeTable] = None) -> DnaSetup:
    """Closed automaton of g encoded with the given table, or with the
    default table choice"""
    if table is None:
        return _defaultSetup(g)
    fsa = build_formula_fsa(g, closed=True)
    return DnaSetup(fsa, table, encode_formula_fsa(fsa, table))


class RunDecisions:
    """All-runs answer and per-run acceptance of an obligation"""

    def __init__(self, answer: bool, perRun: List[Tuple[RunPath, bool]], warning: Optional[str] = None):
        self.answer = answer
        self.perRun = perRun
        self.warning = warning

    def firstRejected(self) -> Optional[RunPath]:
        for (run, accepted) in self.perRun:
            if not accepted:
                return run
        return None


def tl_mc_dna(
    model: SystemModel,
    g: LtlObligation,
    L: int,
    table: Optional[CodeTable] = None,
    runs: Optional[RunCollection] = None,
    verbose: bool = False,
) -> RunDecisions:
    """Decide every bounded run of the model by tiling

    :param model: validated model
    :param g: obligation
    :param L: bound on the run length
    :param table: code table (default choice when None)
    :param runs: runs to decide (enumerated with L when None)
    :param verbose: show a progress bar
    :return: answer (every run accepted) and per-run acceptance
    """
    setup = dna_setup(g, table)
    if runs is None:
        runs = enumerate_runs(model, L)

    decided = {}
    perRun = []
    iterable = progressbar.progressbar(runs, max_value=runs.size()) if verbose else runs
    for run in iterable:
        valuations = tuple(run.valuations(model))
        if valuations not in decided:
            result = tile_trace(valuations, setup.library, setup.table, setup.fsa.alphabet)
            decided[valuations] = result.complete
        perRun.append((run, decided[valuations]))

    answer = all(accepted for (_, accepted) in perRun)
    logger.debug("%s on %s: %d runs, answer %s", g, model.name, len(perRun), answer)
    return RunDecisions(answer, perRun, runs.warning)


def _runsFor(model: SystemModel, L: Optional[int], runs: Optional[RunCollection], verbose: bool) -> Tuple[int, RunCollection]:
    if L is None:
        L = compute_bound(model)
        logger.info("bound of %s: %d", model.name, L)
    if runs is None:
        runs = enumerate_runs(model, L, verbose)
    return L, runs


def check_universal(
    model: SystemModel,
    c: CtlConstruct,
    L: Optional[int] = None,
    table: Optional[CodeTable] = None,
    runs: Optional[RunCollection] = None,
    verbose: bool = False,
) -> Verdict:
    """AU, AF, AG, AX: the obligation must accept every run"""
    if classify(c) != UNIVERSAL:
        raise ConstructClassError(str(c) + " is not universal")
    L, runs = _runsFor(model, L, runs, verbose)
    reduction = reduce(c)
    decisions = tl_mc_dna(model, reduction.obligation, L, table, runs, verbose)
    witness = decisions.firstRejected()
    return Verdict(decisions.answer, c, reduction, L, decisions.perRun, witness, decisions.warning)


def check_existential(
    model: SystemModel,
    c: CtlConstruct,
    L: Optional[int] = None,
    table: Optional[CodeTable] = None,
    runs: Optional[RunCollection] = None,
    verbose: bool = False,
) -> Verdict:
    """EU, EF, EG, EX: check the negated obligation on every run and
    invert the answer"""
    if classify(c) != EXISTENTIAL:
        raise ConstructClassError(str(c) + " is not existential")
    L, runs = _runsFor(model, L, runs, verbose)
    reduction = reduce(c)
    decisions = tl_mc_dna(model, reduction.obligation, L, table, runs, verbose)
    witness = decisions.firstRejected()
    return Verdict(not decisions.answer, c, reduction, L, decisions.perRun, witness, decisions.warning)


def check_ctl(
    model: SystemModel,
    c: CtlConstruct,
    L: Optional[int] = None,
    table: Optional[CodeTable] = None,
    runs: Optional[RunCollection] = None,
    verbose: bool = False,
) -> Verdict:
    """Dispatch on the construct class; L defaults to compute_bound"""
    if classify(c) == EXISTENTIAL:
        return check_existential(model, c, L, table, runs, verbose)
    return check_universal(model, c, L, table, runs, verbose)


def check_path(model: SystemModel, path: RunPath, g: LtlObligation, table: Optional[CodeTable] = None) -> bool:
    """DNA-layer decision of one explicit run"""
    setup = dna_setup(g, table)
    return tile_trace(path.valuations(model), setup.library, setup.table, setup.fsa.alphabet).complete


def parameterized_path(model: SystemModel, k: int) -> RunPath:
    """Run (s0, s1)^k, s2 of a model shaped like s0 <-> s1 -> s2: s1 is
    the first successor of the initial state and s2 the first successor
    of s1 other than s0

    :raise InvalidRunError: the model does not have that shape
    """
    if k < 1:
        raise InvalidRunError("path index starts at 1")
    s0 = model.initial
    succ0 = model.getSuccessors(s0)
    if not succ0:
        raise InvalidRunError("initial state has no successor")
    s1 = succ0[0]
    exits = [s for s in model.getSuccessors(s1) if s != s0]
    if not exits:
        raise InvalidRunError("state " + str(s1) + " has no exit other than " + str(s0))
    return RunPath([s0, s1] * k + [exits[0]], model)


class AgreementReport:
    """DNA and oracle verdicts of a construct over the same runs"""

    def __init__(self, construct: CtlConstruct, dna: Verdict, oracle: Verdict):
        self.construct = construct
        self.dna = dna
        self.oracle = oracle
        self.firstDifferingRun: Optional[RunPath] = None

        # an existential construct's DNA per-run value decides its negation
        invert = classify(construct) == EXISTENTIAL
        for (run, accepted), (_, satisfied) in zip(dna.perRun, oracle.perRun):
            if (accepted != satisfied) != invert:
                self.firstDifferingRun = run
                break

    @property
    def agree(self) -> bool:
        return self.dna.answer == self.oracle.answer and self.firstDifferingRun is None

    def __str__(self) -> str:
        out = str(self.construct) + ": dna " + self.dna.answerText() + ", oracle " + self.oracle.answerText()
        out += " -> " + ("agree" if self.agree else "DISAGREE")
        if self.firstDifferingRun is not None:
            out += " at run " + str(self.firstDifferingRun)
        return out


def cross_validate(
    model: SystemModel,
    c: CtlConstruct,
    L: Optional[int] = None,
    table: Optional[CodeTable] = None,
) -> AgreementReport:
    """Run the DNA checker and the oracle on the same run set"""
    L, runs = _runsFor(model, L, None, False)
    dna = check_ctl(model, c, L, table, runs)
    oracle = oracle_check(model, c, runs, L)
    report = AgreementReport(c, dna, oracle)
    if not report.agree:
        logger.warning("%s", report)
    return report
