# -*- coding: utf-8 -*-

from unittest import TestCase, TestSuite, TextTestRunner

from stickerlib.core.Errors import FormulaSyntaxError, NestedFormulaError
from stickerlib.core.Formula import AU, EG, EU, CtlConstruct
from stickerlib.core.Logic import Literal
from stickerlib.io.FormulaReader import parse_formula, render_formula

ALL = ["A p U q", "AF p", "AG p", "AX p", "E p U q", "EF p", "EG p", "EX p"]


class TestFormulaReader(TestCase):

    def testBinary(self):
        c = parse_formula("A p U q")
        self.assertEqual(CtlConstruct(AU, Literal("p"), Literal("q")), c)
        self.assertEqual(EU, parse_formula("E p U q").kind)

    def testNegatedAtom(self):
        c = parse_formula("EG !p")
        self.assertEqual(EG, c.kind)
        self.assertEqual(Literal("p", True), c.atomP)
        self.assertIsNone(c.atomQ)

    def testParenthesizedAtom(self):
        self.assertEqual(parse_formula("AF p"), parse_formula("AF (p)"))
        self.assertEqual(parse_formula("AF p"), parse_formula("  AF   p "))

    def testNested(self):
        with self.assertRaises(NestedFormulaError):
            parse_formula("AF (AG p)")

    def testSyntaxErrors(self):
        for text in ("AF (p", "", "AF", "A p q", "AF P", "BF p"):
            with self.assertRaises(FormulaSyntaxError):
                parse_formula(text)
        try:
            parse_formula("AF (p")
        except FormulaSyntaxError as e:
            self.assertIsNotNone(e.column)

    def testRender(self):
        for text in ALL:
            c = parse_formula(text)
            self.assertEqual(c, parse_formula(render_formula(c)))


if __name__ == '__main__':
    suite = TestSuite()
    suite.addTest(TestFormulaReader("testBinary"))
    suite.addTest(TestFormulaReader("testNegatedAtom"))
    suite.addTest(TestFormulaReader("testParenthesizedAtom"))
    suite.addTest(TestFormulaReader("testNested"))
    suite.addTest(TestFormulaReader("testSyntaxErrors"))
    suite.addTest(TestFormulaReader("testRender"))
    runner = TextTestRunner()
    runner.run(suite)
