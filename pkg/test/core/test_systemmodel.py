# -*- coding: utf-8 -*-

import os.path
from unittest import TestCase, TestSuite, TextTestRunner

from stickerlib.core.CodeTable import tab3
from stickerlib.core.Errors import AlphabetError, InvalidRunError
from stickerlib.core.Logic import Valuation
from stickerlib.core.SystemModel import RunPath, SystemModel, Violation, Word, validate_model
from stickerlib.io.ModelReader import ModelReader


class TestSystemModel(TestCase):

    def setUp(self):
        self.resource_path = os.path.join(os.path.split(__file__)[0], "../..")
        self.m1 = ModelReader.readFromFile(os.path.join(self.resource_path, "data/models/m1.lfsa"))
        self.labels = {
            "0": Valuation({"p": True, "q": False}),
            "1": Valuation({"p": False, "q": False}),
            "2": Valuation({"p": False, "q": True}),
        }

    def testM1(self):
        self.assertEqual([], validate_model(self.m1))
        self.assertEqual(3, self.m1.numberOfStates())
        self.assertEqual(3, self.m1.numberOfEdges())
        self.assertEqual("0", self.m1.initial)
        self.assertEqual(["0", "2"], self.m1.getSuccessors("1"))
        self.assertEqual(self.labels["1"], self.m1.valuation("1"))

    def testUndeclaredEdgeTarget(self):
        model = SystemModel("m", ["0", "1", "2"], "0", [("0", "1"), ("1", "9")], self.labels)
        report = validate_model(model)
        self.assertEqual(1, len(report))
        self.assertEqual(Violation.EDGE, report[0].kind)
        self.assertEqual(("1", "9"), report[0].subject)
        self.assertIn("9", str(report[0]))

    def testMissingLabel(self):
        labels = {s: v for s, v in self.labels.items() if s != "2"}
        model = SystemModel("m", ["0", "1", "2"], "0", [("0", "1")], labels)
        report = validate_model(model)
        self.assertEqual([Violation(Violation.LABELING, "2", "state 2 has no label")], report)

    def testPartialValuation(self):
        labels = dict(self.labels)
        labels["2"] = Valuation({"q": True})
        model = SystemModel("m", ["0", "1", "2"], "0", [], labels)
        kinds = [v.kind for v in validate_model(model)]
        self.assertEqual([Violation.VALUATION], kinds)

    def testUnknownInitial(self):
        model = SystemModel("m", ["0"], "5", [], {"0": self.labels["0"]})
        self.assertEqual(Violation.INITIAL, validate_model(model)[0].kind)

    def testRunPath(self):
        run = RunPath(["0", "1", "2"], self.m1)
        self.assertEqual("(0,1,2)", str(run))
        self.assertEqual(3, len(run))
        self.assertEqual([self.labels[s] for s in "012"], run.valuations(self.m1))
        with self.assertRaises(InvalidRunError):
            RunPath(["1", "2"], self.m1)
        with self.assertRaises(InvalidRunError):
            RunPath(["0", "2"], self.m1)
        with self.assertRaises(InvalidRunError):
            RunPath([])

    def testWord(self):
        alphabet = [a for a in tab3().letters.values()]
        w = Word.fromNames(["s", "u", "q"], alphabet)
        self.assertEqual("s,u,q", str(w))
        self.assertEqual(["s", "u", "q"], w.names())
        self.assertEqual(0, len(Word()))
        with self.assertRaises(AlphabetError):
            Word.fromNames(["z"], alphabet)


if __name__ == '__main__':
    suite = TestSuite()
    suite.addTest(TestSystemModel("testM1"))
    suite.addTest(TestSystemModel("testUndeclaredEdgeTarget"))
    suite.addTest(TestSystemModel("testMissingLabel"))
    suite.addTest(TestSystemModel("testPartialValuation"))
    suite.addTest(TestSystemModel("testUnknownInitial"))
    suite.addTest(TestSystemModel("testRunPath"))
    suite.addTest(TestSystemModel("testWord"))
    runner = TextTestRunner()
    runner.run(suite)
