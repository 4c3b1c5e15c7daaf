"""Write strand dumps: one '>name orientation' header per strand,
followed by the sequence in its written direction"""

from typing import Iterable

from stickerlib.core.Strand import DnaStrand


def format_strands(strands: Iterable[DnaStrand]) -> str:
    out = ""
    for s in strands:
        out += ">" + s.label + " " + s.orientation + "\n" + s.written() + "\n"
    return out


class StrandWriter:
    @staticmethod
    def writeToFile(strands: Iterable[DnaStrand], path: str):
        with open(path, "w", encoding="utf-8") as f:
            f.write(format_strands(strands))
