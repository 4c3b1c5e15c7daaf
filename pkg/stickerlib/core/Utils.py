"""
Small helpers shared by the core types and the readers.
"""

# For type annotation
from __future__ import annotations
from typing import Any, Iterable

import re

IDENTIFIER = re.compile(r"^[a-z][a-z0-9_]*$")
STATE_ID = re.compile(r"^[A-Za-z0-9_]+$")


def isIdentifier(name: str) -> bool:
    """Check that a proposition name follows the formula grammar"""
    return bool(IDENTIFIER.match(name))


def isStateId(name: str) -> bool:
    """Check that a state identifier is a single token"""
    return bool(STATE_ID.match(name))


def stateSortKey(state: Any) -> tuple:
    """Sort key ordering numeric identifiers numerically ("2" < "10")
    and putting them before the other identifiers"""
    text = str(state)
    if text.isdigit():
        return (0, int(text), text)
    return (1, 0, text)


def sortedStates(states: Iterable[Any]) -> list:
    return sorted(states, key=stateSortKey)


def maxHomopolymer(sequence: str) -> int:
    """Length of the longest run of a single base"""
    best = 0
    current = 0
    previous = None
    for base in sequence:
        current = current + 1 if base == previous else 1
        previous = base
        best = max(best, current)
    return best
