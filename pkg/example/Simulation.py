'''

Hybridization experiment on the path (s0,s1)^k,s2 of M1:
+ encode the automaton of Phi1(!p, !q) with the shipped code table
+ tile the class-I strand with every group of three transition strands
+ plot the complete duplex

'''
import matplotlib.pyplot as plt

from stickerlib.algo.Automata import build_formula_fsa, least_accepted_word
from stickerlib.algo.Checker import parameterized_path
from stickerlib.algo.Encoding import audit_code_table, encode_formula_fsa, encode_run
from stickerlib.algo.Hybridization import decode_tiling, enumerate_groups, plotTiling, readout, tile
from stickerlib.core.CodeTable import tab3
from stickerlib.core.Formula import PHI1, LtlObligation
from stickerlib.core.Logic import Literal
from stickerlib.io.ModelReader import ModelReader
from stickerlib.io.ReportWriter import audit_to_text, groups_to_text
from stickerlib.io.StrandWriter import format_strands

m1 = ModelReader.readFromFile("../data/models/m1.lfsa")
ct = tab3()
print(audit_to_text(audit_code_table(ct)))

# ---------------------------------------------------
# Class-II library
# ---------------------------------------------------
a1 = build_formula_fsa(LtlObligation(PHI1, Literal("p", True), Literal("q", True)))
library = encode_formula_fsa(a1, ct)
print(format_strands(library.strands()))

# ---------------------------------------------------
# Class-I strands of the first paths
# ---------------------------------------------------
for k in (1, 2, 15):
    path = parameterized_path(m1, k)
    word = least_accepted_word(a1, path.valuations(m1))
    strand = encode_run(word, ct, "path" + str(k))
    result = tile(strand, library)
    print(path, word, len(strand), "nt:", readout(result))
    if result.complete:
        print("   automaton states", decode_tiling(result, a1))

path = parameterized_path(m1, 1)
strand = encode_run(least_accepted_word(a1, path.valuations(m1)), ct)
print(groups_to_text(enumerate_groups(strand, library, 3)))

plotTiling(tile(strand, library), strand)
plt.show()
