'''

Read the three-state model M1
+ check the eight basic CTL constructs through the DNA layer
+ compare each verdict with the classical path checker

'''
from stickerlib.algo.Checker import check_ctl, compute_bound, cross_validate, enumerate_runs
from stickerlib.io.FormulaReader import parse_formula
from stickerlib.io.ModelReader import ModelReader

# ---------------------------------------------------
# Model and its runs
# ---------------------------------------------------
m1 = ModelReader.readFromFile("../data/models/m1.lfsa")
L = compute_bound(m1)
runs = enumerate_runs(m1, L)
print(m1, "- bound", L, "-", runs.size(), "runs")
for run in runs:
    print("  ", run)

# ---------------------------------------------------
# Verdicts
# ---------------------------------------------------
for text in ["A p U q", "AF p", "AG p", "AX p", "E p U q", "EF p", "EG p", "EX p"]:
    c = parse_formula(text)
    verdict = check_ctl(m1, c, L, runs=runs)
    report = cross_validate(m1, c, L)
    print("%-8s %-4s oracle %s" % (text, verdict.answerText(), "agrees" if report.agree else "DISAGREES"))
