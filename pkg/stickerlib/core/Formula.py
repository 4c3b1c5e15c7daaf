"""
This module contains the eight basic CTL constructs, the linear-time
obligations they reduce to, and the reduction itself.

Universal constructs are checked directly on their obligation. An
existential construct is checked on the obligation of its negation
and the verdict is inverted.
"""

# For type annotation
from __future__ import annotations
from typing import Optional

from stickerlib.core.Errors import FormulaError
from stickerlib.core.Logic import Literal

# CTL construct kinds
AU = "AU"
EU = "EU"
AF = "AF"
EF = "EF"
AG = "AG"
EG = "EG"
AX = "AX"
EX = "EX"
KINDS = (AU, AF, AG, AX, EU, EF, EG, EX)
BINARY_KINDS = (AU, EU)

# Construct classes
UNIVERSAL = "Universal"
EXISTENTIAL = "Existential"

# Obligation kinds
UNTIL = "Until"
FINALLY = "Finally"
GLOBALLY = "Globally"
NEXT = "Next"
# Next that also holds on a single-state trace
WEAK_NEXT = "WeakNext"
PHI1 = "Phi1"
OBLIGATIONS = (UNTIL, FINALLY, GLOBALLY, NEXT, WEAK_NEXT, PHI1)
BINARY_OBLIGATIONS = (UNTIL, PHI1)

# Existential kind -> universal kind of its negation
DUALS = {EF: AG, EG: AF, EX: AX}


class CtlConstruct:
    """One of the eight basic CTL constructs over literal atoms"""

    def __init__(self, kind: str, atomP: Literal, atomQ: Optional[Literal] = None):
        if kind not in KINDS:
            raise FormulaError("unknown CTL construct " + str(kind))
        if (atomQ is not None) != (kind in BINARY_KINDS):
            raise FormulaError("second atom is required exactly for AU and EU")
        self.kind = kind
        self.atomP = atomP
        self.atomQ = atomQ

    def quantifier(self) -> str:
        return self.kind[0]

    def propositions(self) -> frozenset:
        atoms = [self.atomP] + ([self.atomQ] if self.atomQ is not None else [])
        return frozenset(a.prop for a in atoms)

    def __eq__(self, other) -> bool:
        if isinstance(other, CtlConstruct):
            return (self.kind, self.atomP, self.atomQ) == (other.kind, other.atomP, other.atomQ)
        return False

    def __hash__(self) -> int:
        return hash((self.kind, self.atomP, self.atomQ))

    def __str__(self) -> str:
        if self.kind in BINARY_KINDS:
            return self.kind[0] + " " + str(self.atomP) + " U " + str(self.atomQ)
        return self.kind + " " + str(self.atomP)

    def __repr__(self) -> str:
        return "CtlConstruct(" + str(self) + ")"


class LtlObligation:
    """Linear-time obligation checked on every run"""

    def __init__(self, kind: str, atomP: Literal, atomQ: Optional[Literal] = None):
        if kind not in OBLIGATIONS:
            raise FormulaError("unknown obligation " + str(kind))
        if (atomQ is not None) != (kind in BINARY_OBLIGATIONS):
            raise FormulaError("second atom is required exactly for Until and Phi1")
        self.kind = kind
        self.atomP = atomP
        self.atomQ = atomQ

    def atoms(self) -> list:
        return [self.atomP] + ([self.atomQ] if self.atomQ is not None else [])

    def propositions(self) -> frozenset:
        return frozenset(a.prop for a in self.atoms())

    def __eq__(self, other) -> bool:
        if isinstance(other, LtlObligation):
            return (self.kind, self.atomP, self.atomQ) == (other.kind, other.atomP, other.atomQ)
        return False

    def __hash__(self) -> int:
        return hash((self.kind, self.atomP, self.atomQ))

    def __str__(self) -> str:
        return self.kind + "(" + ",".join(str(a) for a in self.atoms()) + ")"

    def __repr__(self) -> str:
        return "LtlObligation(" + str(self) + ")"


class Reduction:
    """Obligation to check on all runs, and whether the verdict is inverted"""

    def __init__(self, obligation: LtlObligation, negateVerdict: bool):
        self.obligation = obligation
        self.negateVerdict = negateVerdict

    def __eq__(self, other) -> bool:
        if isinstance(other, Reduction):
            return self.obligation == other.obligation and self.negateVerdict == other.negateVerdict
        return False

    def __hash__(self) -> int:
        return hash((self.obligation, self.negateVerdict))

    def __str__(self) -> str:
        return str(self.obligation) + (" [negated]" if self.negateVerdict else "")


def classify(c: CtlConstruct) -> str:
    """UNIVERSAL for AU, AF, AG, AX and EXISTENTIAL for EU, EF, EG, EX"""
    if c.kind.startswith("A"):
        return UNIVERSAL
    return EXISTENTIAL


def reduce(c: CtlConstruct) -> Reduction:
    """Obligation of a construct (universal) or of its negation (existential)"""
    p, q = c.atomP, c.atomQ
    if c.kind == AU:
        return Reduction(LtlObligation(UNTIL, p, q), False)
    if c.kind == AF:
        return Reduction(LtlObligation(FINALLY, p), False)
    if c.kind == AG:
        return Reduction(LtlObligation(GLOBALLY, p), False)
    if c.kind == AX:
        return Reduction(LtlObligation(NEXT, p), False)
    if c.kind == EU:
        return Reduction(LtlObligation(PHI1, p.negate(), q.negate()), True)
    if c.kind == EF:
        return Reduction(LtlObligation(GLOBALLY, p.negate()), True)
    if c.kind == EG:
        return Reduction(LtlObligation(FINALLY, p.negate()), True)
    # a run without a second state has no successor satisfying p
    return Reduction(LtlObligation(WEAK_NEXT, p.negate()), True)


def direct_obligation(c: CtlConstruct) -> LtlObligation:
    """Obligation a single run must satisfy, read with the construct's
    own quantifier (EU -> Until, EF -> Finally...)"""
    kind = {"U": UNTIL, "F": FINALLY, "G": GLOBALLY, "X": NEXT}[c.kind[1]]
    return LtlObligation(kind, c.atomP, c.atomQ)


def dual(c: CtlConstruct) -> Optional[CtlConstruct]:
    """Universal construct equivalent to the negation of an existential
    one, when it is a basic construct (EU has none)"""
    if c.kind not in DUALS:
        return None
    return CtlConstruct(DUALS[c.kind], c.atomP.negate())
