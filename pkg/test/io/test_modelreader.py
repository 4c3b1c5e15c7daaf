# -*- coding: utf-8 -*-

import os.path
from unittest import TestCase, TestSuite, TextTestRunner

from stickerlib.core.Errors import ModelSyntaxError, ModelValidationError
from stickerlib.core.Logic import Valuation
from stickerlib.core.SystemModel import Violation
from stickerlib.io.ModelReader import ModelReader, parse_model

M1_TEXT = """
model M1
props p q
states 0 1 2
init 0
label 0 p
label 2 q
edge 0 1
edge 1 0
edge 1 2
"""


class TestModelReader(TestCase):

    def setUp(self):
        self.resource_path = os.path.join(os.path.split(__file__)[0], "../..")

    def testReadM1(self):
        m1 = ModelReader.readFromFile(os.path.join(self.resource_path, "data/models/m1.lfsa"))
        self.assertEqual("M1", m1.name)
        self.assertEqual(("0", "1", "2"), m1.STATES)
        self.assertEqual("0", m1.initial)
        self.assertEqual(3, m1.numberOfEdges())
        self.assertEqual(["1"], m1.getSuccessors("0"))
        self.assertEqual(["0", "2"], m1.getSuccessors("1"))
        self.assertEqual([], m1.getSuccessors("2"))
        self.assertEqual(Valuation({"p": True, "q": False}), m1.valuation("0"))
        self.assertEqual(Valuation({"p": False, "q": False}), m1.valuation("1"))
        self.assertEqual(Valuation({"p": False, "q": True}), m1.valuation("2"))

    def testParseText(self):
        m1 = parse_model(M1_TEXT)
        self.assertEqual("M1", m1.name)
        self.assertEqual(frozenset(["p", "q"]), m1.propositions())
        self.assertEqual(Valuation({"p": False, "q": False}), m1.valuation("1"))

    def testDefaultName(self):
        m2 = ModelReader.readFromFile(os.path.join(self.resource_path, "data/models/m2.lfsa"))
        self.assertEqual("M2", m2.name)
        unnamed = parse_model("states 0\ninit 0\n", "fallback")
        self.assertEqual("fallback", unnamed.name)

    def testMissingInit(self):
        with self.assertRaises(ModelSyntaxError) as context:
            parse_model("states 0 1\nedge 0 1\n")
        self.assertIn("no initial state", str(context.exception))

    def testDuplicateState(self):
        with self.assertRaises(ModelSyntaxError) as context:
            parse_model("states 0 1\nstates 1\ninit 0\n")
        self.assertEqual(2, context.exception.line)

    def testLabeledTwice(self):
        with self.assertRaises(ModelSyntaxError) as context:
            parse_model("states 0\ninit 0\nlabel 0 p\nlabel 0 !p\n")
        self.assertEqual(4, context.exception.line)
        with self.assertRaises(ModelSyntaxError):
            parse_model("states 0\ninit 0\nlabel 0 p !p\n")

    def testUnknownDirective(self):
        with self.assertRaises(ModelSyntaxError) as context:
            parse_model("# comment\nstates 0\ntransition 0 0\ninit 0\n")
        self.assertEqual(3, context.exception.line)

    def testUndeclaredEdge(self):
        with self.assertRaises(ModelValidationError) as context:
            ModelReader.readFromFile(os.path.join(self.resource_path, "data/models/bad-edge.lfsa"))
        kinds = [v.kind for v in context.exception.violations]
        self.assertEqual([Violation.EDGE], kinds)
        self.assertEqual(("0", "7"), context.exception.violations[0].subject)

    def testUndeclaredInitial(self):
        with self.assertRaises(ModelValidationError) as context:
            parse_model("states 0\ninit 5\n")
        self.assertEqual(Violation.INITIAL, context.exception.violations[0].kind)


if __name__ == '__main__':
    suite = TestSuite()
    suite.addTest(TestModelReader("testReadM1"))
    suite.addTest(TestModelReader("testParseText"))
    suite.addTest(TestModelReader("testDefaultName"))
    suite.addTest(TestModelReader("testMissingInit"))
    suite.addTest(TestModelReader("testDuplicateState"))
    suite.addTest(TestModelReader("testLabeledTwice"))
    suite.addTest(TestModelReader("testUnknownDirective"))
    suite.addTest(TestModelReader("testUndeclaredEdge"))
    suite.addTest(TestModelReader("testUndeclaredInitial"))
    runner = TextTestRunner()
    runner.run(suite)
