"""
Command line front end: stickermc check | encode | simulate | oracle | audit

Exit codes: 0 when the property holds (or the command succeeded), 1 when
it fails (check), disagrees (oracle) or does not pass (audit), 2 on
malformed input.
"""

# For type annotation
from __future__ import annotations
from typing import List, Optional

import argparse
import logging
import os
import random
import sys

from stickerlib.algo.Automata import build_formula_fsa, first_emission_word, least_accepted_word
from stickerlib.algo.Checker import (
    DEFAULT_SEED, compute_bound, cross_validate, check_ctl, dna_setup, fitsTable, parameterized_path,
)
from stickerlib.algo.Encoding import audit_code_table, encode_formula_fsa, encode_run, generate_code_table
from stickerlib.algo.Hybridization import enumerate_groups, plotTiling, tile
from stickerlib.algo.Synthetics import randomModel
from stickerlib.core.CodeTable import CodeTable, tab3
from stickerlib.core.Errors import EncodingError, StickerError
from stickerlib.core.Formula import FINALLY, GLOBALLY, NEXT, PHI1, UNTIL, WEAK_NEXT, LtlObligation, reduce
from stickerlib.core.FormulaFsa import FormulaFsa
from stickerlib.core.Logic import Letter, Literal
from stickerlib.core.SystemModel import Word
from stickerlib.io.CodeTableReader import load_table
from stickerlib.io.CodeTableWriter import CodeTableWriter, format_code_table
from stickerlib.io.FormulaReader import parse_formula
from stickerlib.io.ModelReader import ModelReader
from stickerlib.io.ReportWriter import (
    agreement_to_dict, agreement_to_text, audit_to_dict, audit_to_text, groups_to_text,
    tiling_to_text, to_json, verdict_to_dict, verdict_to_text,
)
from stickerlib.io.StrandWriter import StrandWriter, format_strands

logger = logging.getLogger(__name__)

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_ERROR = 2

_p, _q = Literal("p"), Literal("q")

# Automata selectable with --formula-fsa
NAMED_OBLIGATIONS = {
    "phi1": LtlObligation(PHI1, _p.negate(), _q.negate()),
    "until": LtlObligation(UNTIL, _p, _q),
    "finally": LtlObligation(FINALLY, _p),
    "globally": LtlObligation(GLOBALLY, _p),
    "next": LtlObligation(NEXT, _p),
    "weaknext": LtlObligation(WEAK_NEXT, _p),
}

ALL_CONSTRUCTS = ["A p U q", "AF p", "AG p", "AX p", "E p U q", "EF p", "EG p", "EX p"]

# Bound of the random cross-validation runs
RANDOM_BOUND = 6


# =============================================================================
#   Shared helpers
# =============================================================================
def _obligation(args) -> Optional[LtlObligation]:
    if getattr(args, "formula_fsa", None):
        return NAMED_OBLIGATIONS[args.formula_fsa]
    if getattr(args, "formula", None):
        return reduce(parse_formula(args.formula)).obligation
    return None


def _table(args, fsa: Optional[FormulaFsa]) -> CodeTable:
    """--generate, then --table, then the shipped table when it fits"""
    if getattr(args, "generate", False):
        if fsa is None:
            raise EncodingError("--generate needs an automaton (--formula or --formula-fsa)")
        return generate_code_table(fsa.alphabet, fsa.numberOfStates(), args.code_len, args.spacer_len, args.seed)
    if args.table:
        return load_table(args.table)
    if fsa is None or fitsTable(fsa, tab3()):
        return tab3()
    return generate_code_table(fsa.alphabet, fsa.numberOfStates(), 3, 3, DEFAULT_SEED)


# =============================================================================
#   Commands
# =============================================================================
def cmd_check(args) -> int:
    model = ModelReader.readFromFile(args.model)
    construct = parse_formula(args.formula)
    table = load_table(args.table) if args.table else None
    verdict = check_ctl(model, construct, args.bound, table, verbose=args.verbose)

    artifacts = {}
    if args.dna_out:
        os.makedirs(args.dna_out, exist_ok=True)
        setup = dna_setup(verdict.reduction.obligation, table)
        artifacts["codeTable"] = os.path.join(args.dna_out, "table.ct")
        CodeTableWriter.writeToFile(setup.table, artifacts["codeTable"])
        artifacts["library"] = os.path.join(args.dna_out, "library.fa")
        StrandWriter.writeToFile(setup.library.strands(), artifacts["library"])
        strands = []
        for i, (run, _) in enumerate(verdict.perRun):
            valuations = run.valuations(model)
            word = least_accepted_word(setup.fsa, valuations) or first_emission_word(setup.fsa.alphabet, valuations)
            if word is not None:
                strands.append(encode_run(word, setup.table, "run" + str(i + 1)))
        artifacts["runs"] = os.path.join(args.dna_out, "runs.fa")
        StrandWriter.writeToFile(strands, artifacts["runs"])

    if args.report == "json":
        sys.stdout.write(to_json(verdict_to_dict(verdict, artifacts)))
    else:
        sys.stdout.write(verdict_to_text(verdict, artifacts))
    return EXIT_HOLDS if verdict.answer else EXIT_FAILS


def cmd_encode(args) -> int:
    g = _obligation(args)
    fsa = build_formula_fsa(g, closed=args.closed) if g is not None else None
    table = _table(args, fsa)

    strands = []
    if fsa is not None:
        strands += encode_formula_fsa(fsa, table).strands()
    if args.word is not None:
        names = [n for n in args.word.split(",") if n]
        alphabet = fsa.alphabet if fsa is not None else _tableAlphabet(table)
        strands.append(encode_run(Word.fromNames(names, alphabet), table))

    if args.out:
        os.makedirs(args.out, exist_ok=True)
        CodeTableWriter.writeToFile(table, os.path.join(args.out, "table.ct"))
        StrandWriter.writeToFile(strands, os.path.join(args.out, "strands.fa"))
        print(os.path.join(args.out, "table.ct"))
        print(os.path.join(args.out, "strands.fa"))
    else:
        sys.stdout.write(format_code_table(table))
        sys.stdout.write(format_strands(strands))
    return EXIT_HOLDS


def _tableAlphabet(table: CodeTable) -> List[Letter]:
    """Letters of a table, unconditioned when the table gives no literals"""
    return [table.letters[n] or Letter(n, ()) for n in table.letterNames()]


def cmd_simulate(args) -> int:
    model = ModelReader.readFromFile(args.model)
    g = _obligation(args)
    if g is None:
        raise StickerError("simulate needs --formula-fsa or --formula")
    fsa = build_formula_fsa(g)
    table = _table(args, fsa)
    library = encode_formula_fsa(fsa, table)

    path = parameterized_path(model, args.path)
    valuations = path.valuations(model)
    word = least_accepted_word(fsa, valuations) or first_emission_word(fsa.alphabet, valuations)
    if word is None:
        raise EncodingError("a state of path " + str(path) + " emits no letter of " + fsa.name)
    strand = encode_run(word, table, "path" + str(args.path))

    print("path    " + str(path))
    print("word    " + str(word))
    print("strand  " + strand.written() + " (" + str(len(strand)) + " nt)")
    full = tile(strand, library)
    sys.stdout.write("full library  " + tiling_to_text(full))
    if args.groups is not None:
        sys.stdout.write(groups_to_text(enumerate_groups(strand, library, args.groups)))
    if args.plot:
        ax = plotTiling(full, strand)
        ax.figure.savefig(args.plot)
    return EXIT_HOLDS


def cmd_oracle(args) -> int:
    reports = []
    if args.random:
        rng = random.Random(args.seed)
        for _ in range(args.random):
            model = randomModel(rng.randint(1, args.states), rng=rng)
            bound = min(compute_bound(model), args.bound or RANDOM_BOUND)
            for text in ALL_CONSTRUCTS:
                reports.append(cross_validate(model, parse_formula(text), bound))
    else:
        if not args.model:
            raise StickerError("oracle needs --model or --random")
        model = ModelReader.readFromFile(args.model)
        if args.all_constructs:
            constructs = [parse_formula(text) for text in ALL_CONSTRUCTS]
        elif args.formula:
            constructs = [parse_formula(args.formula)]
        else:
            raise StickerError("oracle needs --formula or --all-constructs")
        reports = [cross_validate(model, c, args.bound) for c in constructs]

    if args.report == "json":
        sys.stdout.write(to_json(agreement_to_dict(reports)))
    else:
        sys.stdout.write(agreement_to_text(reports))
    return EXIT_HOLDS if all(r.agree for r in reports) else EXIT_FAILS


def cmd_audit(args) -> int:
    report = audit_code_table(load_table(args.table), args.min_hit)
    if args.report == "json":
        sys.stdout.write(to_json(audit_to_dict(report)))
    else:
        sys.stdout.write(audit_to_text(report))
    return EXIT_HOLDS if report.passes else EXIT_FAILS


# =============================================================================
#   Parser
# =============================================================================
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging and progress bars")

    parser = argparse.ArgumentParser(
        prog="stickermc",
        description="Sticker-automaton DNA model checking of the basic CTL constructs",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", parents=[common], help="model check one construct")
    check.add_argument("--model", required=True, help="model file")
    check.add_argument("--formula", required=True, help='construct, e.g. "E p U q"')
    check.add_argument("--bound", type=int, help="maximal run length (default |V|*2^(|V|-1)+|E|)")
    check.add_argument("--table", help="tab3 or a code table file")
    check.add_argument("--report", choices=["text", "json"], default="text")
    check.add_argument("--dna-out", help="directory for the code table and strand dumps")
    check.set_defaults(func=cmd_check)

    encode = commands.add_parser("encode", parents=[common], help="dump code table and strands")
    source = encode.add_mutually_exclusive_group()
    source.add_argument("--formula", help="construct whose obligation automaton is encoded")
    source.add_argument("--formula-fsa", choices=sorted(NAMED_OBLIGATIONS))
    encode.add_argument("--word", help="comma separated letters of a class-I strand")
    encode.add_argument("--table", help="tab3 or a code table file")
    encode.add_argument("--generate", action="store_true", help="generate the code table")
    encode.add_argument("--seed", type=int, default=DEFAULT_SEED)
    encode.add_argument("--code-len", type=int, default=3)
    encode.add_argument("--spacer-len", type=int, default=3)
    encode.add_argument("--closed", action="store_true", help="encode the automaton used to check runs")
    encode.add_argument("--out", help="output directory (stdout when omitted)")
    encode.set_defaults(func=cmd_encode)

    simulate = commands.add_parser("simulate", parents=[common], help="hybridization experiment on one path")
    simulate.add_argument("--model", required=True)
    source = simulate.add_mutually_exclusive_group(required=True)
    source.add_argument("--formula-fsa", choices=sorted(NAMED_OBLIGATIONS))
    source.add_argument("--formula")
    simulate.add_argument("--path", type=int, required=True, help="k of the path (s0,s1)^k,s2")
    simulate.add_argument("--groups", type=int, help="size of the transition strand groups")
    simulate.add_argument("--table", help="tab3 or a code table file")
    simulate.add_argument("--generate", action="store_true")
    simulate.add_argument("--seed", type=int, default=DEFAULT_SEED)
    simulate.add_argument("--code-len", type=int, default=3)
    simulate.add_argument("--spacer-len", type=int, default=3)
    simulate.add_argument("--plot", help="image file of the full-library duplex")
    simulate.set_defaults(func=cmd_simulate)

    oracle = commands.add_parser("oracle", parents=[common], help="cross-validate with the classical oracle")
    oracle.add_argument("--model")
    oracle.add_argument("--formula")
    oracle.add_argument("--all-constructs", action="store_true")
    oracle.add_argument("--bound", type=int)
    oracle.add_argument("--random", type=int, help="number of random models")
    oracle.add_argument("--states", type=int, default=3, help="maximal states of random models")
    oracle.add_argument("--seed", type=int, default=DEFAULT_SEED)
    oracle.add_argument("--report", choices=["text", "json"], default="text")
    oracle.set_defaults(func=cmd_oracle)

    audit = commands.add_parser("audit", parents=[common], help="cross-hybridization audit of a code table")
    audit.add_argument("--table", required=True, help="tab3 or a code table file")
    audit.add_argument("--min-hit", type=int, help="window length (default: letter code length)")
    audit.add_argument("--report", choices=["text", "json"], default="text")
    audit.set_defaults(func=cmd_audit)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (StickerError, OSError) as e:
        print("stickermc: error: " + str(e), file=sys.stderr)
        return EXIT_ERROR
