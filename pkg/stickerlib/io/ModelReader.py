"""
Read system models

Line-oriented format, '#' starts a comment::

    model M1
    props p q          (optional, propositions false everywhere unless labeled)
    states 0 1 2
    init 0
    label 0 p          (literals p or !p; omitted propositions are false)
    edge 0 1
"""

# For type annotation
from __future__ import annotations
from typing import Dict, List, Optional

import logging

from stickerlib.core.Errors import ModelSyntaxError, ModelValidationError
from stickerlib.core.Logic import Literal, Valuation
from stickerlib.core.SystemModel import SystemModel, validate_model
from stickerlib.core.Utils import isIdentifier, isStateId

logger = logging.getLogger(__name__)

DIRECTIVES = ("model", "props", "states", "init", "label", "edge")


def _literal(token: str, line: int) -> Literal:
    negated = token.startswith("!")
    name = token[1:] if negated else token
    if not isIdentifier(name):
        raise ModelSyntaxError("invalid literal '" + token + "'", line)
    return Literal(name, negated)


def _stateId(token: str, line: int) -> str:
    if not isStateId(token):
        raise ModelSyntaxError("invalid state id '" + token + "'", line)
    return token


def parse_model(text: str, name: Optional[str] = None) -> SystemModel:
    """Parse and validate a model

    :param text: model file content
    :param name: name used when the file has no model line
    :raise ModelSyntaxError: malformed line, with its number
    :raise ModelValidationError: the model breaks its invariants
    """
    modelName = name
    props: List[str] = []
    states: List[str] = []
    initial = None
    labels: Dict[str, List[Literal]] = {}
    edges = []

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].split()
        if not content:
            continue
        directive, args = content[0], content[1:]

        if directive == "model":
            if len(args) != 1:
                raise ModelSyntaxError("model takes one name", number)
            modelName = args[0]
        elif directive == "props":
            for p in args:
                if not isIdentifier(p):
                    raise ModelSyntaxError("invalid proposition '" + p + "'", number)
                if p not in props:
                    props.append(p)
        elif directive == "states":
            if not args:
                raise ModelSyntaxError("states needs at least one id", number)
            for s in args:
                s = _stateId(s, number)
                if s in states:
                    raise ModelSyntaxError("duplicate state id " + s, number)
                states.append(s)
        elif directive == "init":
            if len(args) != 1:
                raise ModelSyntaxError("init takes one state id", number)
            if initial is not None:
                raise ModelSyntaxError("initial state given twice", number)
            initial = _stateId(args[0], number)
        elif directive == "label":
            if not args:
                raise ModelSyntaxError("label needs a state id", number)
            s = _stateId(args[0], number)
            if s in labels:
                raise ModelSyntaxError("state " + s + " is labeled twice", number)
            literals = [_literal(t, number) for t in args[1:]]
            seen = set()
            for lit in literals:
                if lit.prop in seen:
                    raise ModelSyntaxError("proposition " + lit.prop + " valued twice for state " + s, number)
                seen.add(lit.prop)
                if lit.prop not in props:
                    props.append(lit.prop)
            labels[s] = literals
        elif directive == "edge":
            if len(args) != 2:
                raise ModelSyntaxError("edge takes a source and a target", number)
            edges.append((_stateId(args[0], number), _stateId(args[1], number)))
        else:
            raise ModelSyntaxError("unknown directive '" + directive + "'", number)

    if initial is None:
        raise ModelSyntaxError("no initial state")

    labeling = {}
    for s in list(states) + [s for s in labels if s not in states]:
        values = {p: False for p in props}
        for lit in labels.get(s, []):
            values[lit.prop] = not lit.negated
        labeling[s] = Valuation(values)

    model = SystemModel(modelName or "model", states, initial, edges, labeling)
    violations = validate_model(model)
    if violations:
        raise ModelValidationError(violations)
    logger.debug("read %s", model)
    return model


class ModelReader:
    @staticmethod
    def readFromFile(path: str) -> SystemModel:
        """Read a model file; the file name is the default model name"""
        with open(path, encoding="utf-8") as f:
            text = f.read()
        default = path.replace("\\", "/").split("/")[-1].rsplit(".", 1)[0]
        return parse_model(text, default)
