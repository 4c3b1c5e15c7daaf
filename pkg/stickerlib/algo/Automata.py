"""
Formula automata: construction for each obligation kind, letter
relabeling and acceptance of words, valuation traces and runs.

Two variants are built. The reference automata recognise exactly the
words of the obligation shapes (p*q for Until...). The closed variants
add the transitions that let an obligation already decided on a prefix
absorb any suffix; runs are checked with them.
"""

# For type annotation
from __future__ import annotations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

import logging

from stickerlib.core.Errors import AlphabetError, RelabelError
from stickerlib.core.FormulaFsa import FormulaFsa
from stickerlib.core.Formula import FINALLY, GLOBALLY, NEXT, PHI1, UNTIL, WEAK_NEXT, LtlObligation
from stickerlib.core.Logic import ALIAS_PROPS, Letter, Literal, Valuation, emittable_letters, makeLetter
from stickerlib.core.SystemModel import RunPath, SystemModel, Word

logger = logging.getLogger(__name__)

# Letter roles: the obligation's first atom, its second atom, negations
P, NP, Q, NQ = "P", "!P", "Q", "!Q"


class Template:
    """Automaton shape over letter roles"""

    def __init__(self, states, initial, accepting, transitions, closedStates=(), closedAccepting=(), closedTransitions=()):
        self.states = list(states)
        self.initial = initial
        self.accepting = list(accepting)
        self.transitions = list(transitions)
        self.closedStates = list(closedStates)
        self.closedAccepting = list(closedAccepting)
        self.closedTransitions = list(closedTransitions)


TEMPLATES = {
    UNTIL: Template(
        ["a0", "a1"], "a0", ["a1"],
        [("a0", (P,), "a0"), ("a0", (Q,), "a1")],
        closedTransitions=[("a1", (P,), "a1"), ("a1", (NP,), "a1")],
    ),
    # s = [Q], u = [P & Q], q = [!Q]
    PHI1: Template(
        ["s0", "s1", "s2"], "s0", ["s2"],
        [
            ("s0", (Q,), "s0"),
            ("s0", (Q,), "s2"),
            ("s0", (P, Q), "s1"),
            ("s1", (Q,), "s1"),
            ("s1", (NQ,), "s2"),
        ],
        closedStates=["s3"],
        closedAccepting=["s3"],
        closedTransitions=[("s1", (NQ,), "s3"), ("s3", (Q,), "s3"), ("s3", (NQ,), "s3")],
    ),
    FINALLY: Template(
        ["f0", "f1"], "f0", ["f1"],
        [("f0", (NP,), "f0"), ("f0", (P,), "f1"), ("f1", (P,), "f1"), ("f1", (NP,), "f1")],
    ),
    GLOBALLY: Template(["g0"], "g0", ["g0"], [("g0", (P,), "g0")]),
    NEXT: Template(
        ["x0", "x1", "x2"], "x0", ["x2"],
        [
            ("x0", (P,), "x1"),
            ("x0", (NP,), "x1"),
            ("x1", (P,), "x2"),
            ("x2", (P,), "x2"),
            ("x2", (NP,), "x2"),
        ],
    ),
    # x1 accepting: a trace that stops after its first position holds
    WEAK_NEXT: Template(
        ["x0", "x1", "x2"], "x0", ["x1", "x2"],
        [
            ("x0", (P,), "x1"),
            ("x0", (NP,), "x1"),
            ("x1", (P,), "x2"),
            ("x2", (P,), "x2"),
            ("x2", (NP,), "x2"),
        ],
    ),
}


def usesAliases(g: LtlObligation) -> bool:
    """Reference letter names apply when every atom is p or q"""
    return g.propositions() <= ALIAS_PROPS


def _assemble(kind: str, atomP: Literal, atomQ: Optional[Literal], closed: bool, aliases: bool, name: str) -> FormulaFsa:
    template = TEMPLATES[kind]
    roles = {P: atomP, NP: atomP.negate()}
    if atomQ is not None:
        roles[Q] = atomQ
        roles[NQ] = atomQ.negate()

    states = template.states + (template.closedStates if closed else [])
    accepting = template.accepting + (template.closedAccepting if closed else [])
    edges = template.transitions + (template.closedTransitions if closed else [])

    transitions: Dict = {}
    alphabet = set()
    for (source, spec, target) in edges:
        letter = makeLetter([roles[r] for r in spec], aliases)
        if letter is None:
            # contradictory condition, never emitted
            continue
        alphabet.add(letter)
        transitions.setdefault((source, letter), set()).add(target)

    return FormulaFsa(alphabet, states, transitions, template.initial, accepting, name=name)


def build_formula_fsa(g: LtlObligation, closed: bool = False) -> FormulaFsa:
    """Automaton of an obligation

    The automaton is first built on the positive atoms; negated atoms are
    then applied by relabeling each letter to the letter with the flipped
    literals.

    :param g: obligation
    :param closed: build the suffix-absorbing variant used to check runs
    :return: the formula automaton
    """
    aliases = usesAliases(g)
    name = "A(" + str(g) + ")" + (" closed" if closed else "")
    atoms = g.atoms()
    negated = {a.prop for a in atoms if a.negated}
    sameProp = len({a.prop for a in atoms}) < len(atoms)

    if not negated or sameProp:
        fsa = _assemble(g.kind, g.atomP, g.atomQ, closed, aliases, name)
    else:
        base = _assemble(
            g.kind,
            g.atomP.positive(),
            g.atomQ.positive() if g.atomQ is not None else None,
            closed,
            aliases,
            name,
        )
        substitution = {}
        for letter in base.alphabet:
            flipped = [lit.negate() if lit.prop in negated else lit for lit in letter.condition]
            substitution[letter] = makeLetter(flipped, aliases)
        fsa = relabel(base, substitution)

    logger.debug("built %s: %d states, %d transitions", name, fsa.numberOfStates(), fsa.numberOfTransitions())
    return fsa


def relabel(a: FormulaFsa, substitution: Mapping[Letter, Letter]) -> FormulaFsa:
    """Same automaton with every transition letter replaced

    :param a: automaton
    :param substitution: letter -> new letter; unmapped letters are kept
    :raise RelabelError: unknown keys or colliding images
    """
    for key in substitution:
        if key not in a.alphabet:
            raise RelabelError("letter " + repr(key) + " is not in the alphabet of " + a.name)
    image = {letter: substitution.get(letter, letter) for letter in a.alphabet}
    targets = list(image.values())
    if len(set(targets)) != len(targets):
        raise RelabelError("substitution maps two letters to the same letter")
    names = [t.name for t in targets]
    if len(set(names)) != len(names):
        raise RelabelError("substitution maps two letters to the same name")

    transitions = {(source, image[letter]): succ for (source, letter), succ in a.transitions.items()}
    return FormulaFsa(
        targets, a.states, transitions, a.initial, a.accepting, stateIndex=a.stateIndex, name=a.name
    )


def fsa_accepts(a: FormulaFsa, w: Word) -> bool:
    """Subset simulation of a word

    :raise AlphabetError: a letter is outside the alphabet
    """
    current = frozenset([a.initial])
    for letter in w:
        if letter not in a.alphabet:
            raise AlphabetError("letter " + repr(letter) + " is not in the alphabet of " + a.name)
        current = a.step(current, [letter])
        if not current:
            return False
    return bool(current & a.accepting)


def accepts_trace(a: FormulaFsa, valuations: Sequence[Valuation]) -> bool:
    """True iff some word emitted along the valuation sequence is
    accepted. Sweeps the reachable automaton states position by
    position."""
    current = frozenset([a.initial])
    for v in valuations:
        current = a.step(current, emittable_letters(v, a.alphabet))
        if not current:
            return False
    return bool(current & a.accepting)


def accepts_run(a: FormulaFsa, path: RunPath, model: SystemModel) -> bool:
    """Existential emission semantics on a run of the model"""
    return accepts_trace(a, path.valuations(model))


def least_accepted_word(a: FormulaFsa, valuations: Sequence[Valuation]) -> Optional[Word]:
    """Lexicographically least (by letter names) accepted emission word
    of a valuation sequence, None when there is none"""
    n = len(valuations)
    options = [sorted(emittable_letters(v, a.alphabet)) for v in valuations]

    # live[i]: states from which the suffix i.. can be accepted
    live = [frozenset()] * (n + 1)
    live[n] = a.accepting
    for i in range(n - 1, -1, -1):
        live[i] = frozenset(
            s for s in a.states if any(a.successors(s, letter) & live[i + 1] for letter in options[i])
        )
    if a.initial not in live[0]:
        return None

    current = frozenset([a.initial])
    letters = []
    for i in range(n):
        for letter in options[i]:
            reached = a.step(current, [letter]) & live[i + 1]
            if reached:
                letters.append(letter)
                current = reached
                break
    return Word(letters)


def emission_word(a: FormulaFsa, path: RunPath, model: SystemModel) -> Optional[Word]:
    """Least accepted emission word of a run, None if the run is rejected"""
    return least_accepted_word(a, path.valuations(model))


def first_emission_word(alphabet: Iterable[Letter], valuations: Sequence[Valuation]) -> Optional[Word]:
    """Least emission word regardless of acceptance, None when some
    state emits no letter"""
    letters = []
    for v in valuations:
        options = sorted(emittable_letters(v, alphabet))
        if not options:
            return None
        letters.append(options[0])
    return Word(letters)
