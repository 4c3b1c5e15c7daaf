"""Seeded generation of random models, automata, words and valuation
sequences"""

# For type annotation
from __future__ import annotations
from typing import List, Optional, Sequence

import itertools
import random

from stickerlib.core.FormulaFsa import FormulaFsa
from stickerlib.core.Logic import Letter, Literal, Valuation
from stickerlib.core.SystemModel import SystemModel, Word


def allValuations(props: Sequence[str] = ("p", "q")) -> List[Valuation]:
    """Every total valuation over the propositions"""
    props = list(props)
    return [Valuation(dict(zip(props, values))) for values in itertools.product([False, True], repeat=len(props))]


def randomValuations(length: int, props: Sequence[str] = ("p", "q"), rng: Optional[random.Random] = None) -> List[Valuation]:
    rng = rng or random.Random()
    return [Valuation({p: rng.random() < 0.5 for p in props}) for _ in range(length)]


def randomModel(
    nStates: int,
    props: Sequence[str] = ("p", "q"),
    edgeProbability: float = 0.5,
    rng: Optional[random.Random] = None,
    name: str = "random",
) -> SystemModel:
    """Model with states "0".."n-1", initial "0", edges drawn
    independently and random total valuations"""
    rng = rng or random.Random()
    states = [str(i) for i in range(nStates)]
    edges = [(a, b) for a in states for b in states if rng.random() < edgeProbability]
    labeling = {s: Valuation({p: rng.random() < 0.5 for p in props}) for s in states}
    return SystemModel(name, states, states[0], edges, labeling)


def positiveLetters(names: Sequence[str]) -> List[Letter]:
    """One letter per name, conditioned on the proposition of the same name"""
    return [Letter(n, [Literal(n)]) for n in names]


def randomFsa(
    nStates: int,
    alphabet: Sequence[Letter],
    density: float = 0.3,
    rng: Optional[random.Random] = None,
) -> FormulaFsa:
    """Nondeterministic automaton with states "q0".."q<n-1>", initial
    "q0" and random transitions and accepting states"""
    rng = rng or random.Random()
    states = ["q" + str(i) for i in range(nStates)]
    transitions = {}
    for s in states:
        for a in alphabet:
            targets = {t for t in states if rng.random() < density}
            if targets:
                transitions[(s, a)] = targets
    accepting = [s for s in states if rng.random() < 0.5]
    return FormulaFsa(alphabet, states, transitions, states[0], accepting, name="random")


def randomWord(alphabet: Sequence[Letter], length: int, rng: Optional[random.Random] = None) -> Word:
    rng = rng or random.Random()
    alphabet = sorted(alphabet)
    return Word([rng.choice(alphabet) for _ in range(length)])
