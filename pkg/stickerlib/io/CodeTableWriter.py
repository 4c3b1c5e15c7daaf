"""Write code tables in the format of CodeTableReader"""

from stickerlib.core.CodeTable import INITIATOR, TERMINATOR, CodeTable

HEADER = "# stickerlib code table"


def format_code_table(ct: CodeTable) -> str:
    lines = [HEADER, INITIATOR + " " + ct.initiator, TERMINATOR + " " + ct.terminator]
    for i, x in enumerate(ct.spacers):
        lines.append("X" + str(i) + " " + x)
    for name in ct.letterNames():
        line = "code " + name + " " + ct.letterCodes[name]
        letter = ct.letters[name]
        if letter is not None and letter.condition:
            line += " " + " ".join(str(lit) for lit in letter.condition)
        lines.append(line)
    return "\n".join(lines) + "\n"


class CodeTableWriter:
    @staticmethod
    def writeToFile(ct: CodeTable, path: str):
        with open(path, "w", encoding="utf-8") as f:
            f.write(format_code_table(ct))
