"""
Text and JSON reports of verdicts, agreement checks, audits and
hybridization groups. JSON is emitted with sorted keys so that a
parsed report re-emits byte for byte.
"""

# For type annotation
from __future__ import annotations
from typing import Dict, List, Optional, Sequence, Tuple

import json

from stickerlib.algo.Checker import AgreementReport
from stickerlib.algo.Encoding import AuditReport
from stickerlib.algo.Hybridization import TilingResult, readout
from stickerlib.core.Verdict import Verdict


def to_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _path(run) -> List[str]:
    return [str(s) for s in run]


# =============================================================================
#   Verdicts
# =============================================================================
def verdict_to_dict(v: Verdict, artifacts: Optional[Dict[str, str]] = None) -> dict:
    data = {
        "construct": str(v.construct),
        "reduction": {"obligation": str(v.reduction.obligation), "negate": v.reduction.negateVerdict},
        "bound": v.bound,
        "runsChecked": v.runsChecked,
        "answer": v.answerText(),
        "perRun": [{"path": _path(run), "accepted": accepted} for (run, accepted) in v.perRun],
    }
    if v.witness is not None:
        data["witness"] = _path(v.witness)
    if v.warning is not None:
        data["warning"] = v.warning
    if artifacts:
        data["dnaArtifacts"] = dict(artifacts)
    return data


def verdict_to_text(v: Verdict, artifacts: Optional[Dict[str, str]] = None) -> str:
    out = "construct   " + str(v.construct) + "\n"
    out += "obligation  " + str(v.reduction.obligation)
    out += " (verdict negated)\n" if v.reduction.negateVerdict else "\n"
    out += "bound       " + str(v.bound) + "\n"
    out += "runs        " + str(v.runsChecked) + "\n"
    for (run, accepted) in v.perRun:
        out += "  " + ("accepted  " if accepted else "rejected  ") + "(" + ",".join(_path(run)) + ")\n"
    if v.witness is not None:
        out += "witness     (" + ",".join(_path(v.witness)) + ")\n"
    if v.warning is not None:
        out += "warning     " + v.warning + "\n"
    for kind, path in sorted((artifacts or {}).items()):
        out += kind + " -> " + path + "\n"
    out += "answer      " + v.answerText() + "\n"
    return out


# =============================================================================
#   Oracle agreement
# =============================================================================
def agreement_to_dict(reports: Sequence[AgreementReport]) -> dict:
    rows = []
    for r in reports:
        row = {
            "construct": str(r.construct),
            "dna": r.dna.answerText(),
            "oracle": r.oracle.answerText(),
            "agree": r.agree,
            "runsChecked": r.dna.runsChecked,
        }
        if r.firstDifferingRun is not None:
            row["firstDifferingRun"] = _path(r.firstDifferingRun)
        rows.append(row)
    return {"rows": rows, "agreement": sum(1 for r in reports if r.agree), "total": len(reports)}


def agreement_to_text(reports: Sequence[AgreementReport]) -> str:
    out = "%-12s %-5s %-7s %s\n" % ("construct", "dna", "oracle", "agree")
    for r in reports:
        out += "%-12s %-5s %-7s %s\n" % (str(r.construct), r.dna.answerText(), r.oracle.answerText(), "yes" if r.agree else "NO")
        if r.firstDifferingRun is not None:
            out += "  first differing run (" + ",".join(_path(r.firstDifferingRun)) + ")\n"
    out += str(sum(1 for r in reports if r.agree)) + "/" + str(len(reports)) + " agree\n"
    return out


# =============================================================================
#   Code table audit
# =============================================================================
def audit_to_dict(report: AuditReport) -> dict:
    return {
        "minHit": report.minHit,
        "passes": report.passes,
        "pairs": [list(p) for p in report.pairs()],
        "hits": [h.asDict() for h in report.hits],
        "composition": {
            name: {
                "counts": report.composition[name].asDict(),
                "percentages": report.composition[name].percentages(),
                "gc": report.composition[name].gcContent(),
                "maxHomopolymer": report.homopolymer[name],
            }
            for name, _ in report.fragments
        },
    }


def audit_to_text(report: AuditReport) -> str:
    out = "cross-hybridization at minHit " + str(report.minHit) + ": "
    out += ("pass" if report.passes else "fail") + "\n"
    for (first, second) in report.pairs():
        windows = [h for h in report.hits if h.pair() == (first, second)]
        out += "  " + first + " / " + second + ": " + ", ".join(str(h) for h in windows) + "\n"
    out += "base composition\n"
    for name, seq in report.fragments:
        c = report.composition[name]
        out += "  %-4s %-8s %s GC=%s%% homopolymer=%d\n" % (name, seq, str(c), c.gcContent(), report.homopolymer[name])
    return out


# =============================================================================
#   Hybridization
# =============================================================================
def groups_to_text(groups: Sequence[Tuple[Tuple[str, ...], TilingResult]]) -> str:
    out = ""
    for i, (group, result) in enumerate(groups, start=1):
        out += "group %-3d {%s}  %s  %s\n" % (
            i,
            ", ".join(group),
            "complete" if result.complete else "incomplete",
            readout(result),
        )
    out += str(sum(1 for (_, r) in groups if r.complete)) + " of " + str(len(groups)) + " groups complete\n"
    return out


def tiling_to_text(result: TilingResult) -> str:
    out = readout(result) + ": " + str(result) + "\n"
    for name, count in sorted(result.multiplicity.items()):
        out += "  " + name + " x" + str(count) + "\n"
    return out
