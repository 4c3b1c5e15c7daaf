"""
Classical finite-trace semantics of the obligations and brute-force
checking of the basic constructs over enumerated runs.

Until is strong (q must occur). Next is false on a one-state trace and
WeakNext is true on it.
"""

# For type annotation
from __future__ import annotations
from typing import Iterable, Sequence

import logging

from stickerlib.core.Errors import FormulaError, StickerError
from stickerlib.core.Formula import (
    EXISTENTIAL, FINALLY, GLOBALLY, NEXT, PHI1, UNTIL, WEAK_NEXT,
    CtlConstruct, LtlObligation, classify, direct_obligation, reduce,
)
from stickerlib.core.Logic import Literal, Valuation
from stickerlib.core.SystemModel import RunPath, SystemModel
from stickerlib.core.Verdict import Verdict

logger = logging.getLogger(__name__)


def _until(p: Literal, q: Literal, vs: Sequence[Valuation]) -> bool:
    for v in vs:
        if q.holds(v):
            return True
        if not p.holds(v):
            return False
    return False


def word_satisfies(g: LtlObligation, vs: Sequence[Valuation]) -> bool:
    """Truth of an obligation on a finite valuation sequence

    :param g: obligation
    :param vs: non-empty valuation sequence
    :raise StickerError: empty sequence
    """
    if len(vs) == 0:
        raise StickerError("obligations are evaluated on non-empty traces")
    p = g.atomP
    if g.kind == UNTIL:
        return _until(p, g.atomQ, vs)
    if g.kind == PHI1:
        return not _until(p.negate(), g.atomQ.negate(), vs)
    if g.kind == FINALLY:
        return any(p.holds(v) for v in vs)
    if g.kind == GLOBALLY:
        return all(p.holds(v) for v in vs)
    if g.kind == NEXT:
        return len(vs) >= 2 and p.holds(vs[1])
    if g.kind == WEAK_NEXT:
        return len(vs) < 2 or p.holds(vs[1])
    raise FormulaError("unknown obligation " + str(g.kind))


def oracle_check(model: SystemModel, c: CtlConstruct, runs: Iterable[RunPath], bound: int = 0) -> Verdict:
    """Brute-force verdict of a construct over a set of runs

    perRun records, for each run, whether it satisfies the construct's
    own obligation (EU -> Until, EF -> Finally...). The witness is the
    first satisfying run of an existential yes, or the first failing run
    of a universal no.

    :param model: system model
    :param c: construct
    :param runs: runs of the model
    :param bound: bound the runs were enumerated with (reported only)
    """
    g = direct_obligation(c)
    perRun = [(run, word_satisfies(g, run.valuations(model))) for run in runs]

    if classify(c) == EXISTENTIAL:
        satisfying = [run for (run, ok) in perRun if ok]
        answer = len(satisfying) > 0
        witness = satisfying[0] if answer else None
    else:
        failing = [run for (run, ok) in perRun if not ok]
        answer = len(failing) == 0
        witness = None if answer else failing[0]

    logger.debug("oracle %s on %s: %s over %d runs", c, model.name, answer, len(perRun))
    return Verdict(answer, c, reduce(c), bound, perRun, witness)
