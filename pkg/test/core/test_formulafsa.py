# -*- coding: utf-8 -*-

from unittest import TestCase, TestSuite, TextTestRunner

from stickerlib.core.Errors import AlphabetError, AutomatonError
from stickerlib.core.FormulaFsa import FormulaFsa
from stickerlib.core.Logic import Letter, Literal


class TestFormulaFsa(TestCase):

    def setUp(self):
        self.p = Letter("p", [Literal("p")])
        self.q = Letter("q", [Literal("q")])
        self.fsa = FormulaFsa(
            [self.p, self.q],
            ["a0", "a1"],
            {("a0", self.p): ["a0"], ("a0", self.q): ["a1"]},
            "a0",
            ["a1"],
            name="until",
        )

    def testAccessors(self):
        self.assertEqual(2, self.fsa.numberOfStates())
        self.assertEqual(2, self.fsa.numberOfTransitions())
        self.assertEqual(1, self.fsa.index("a1"))
        self.assertEqual("a0", self.fsa.stateAt(0))
        self.assertEqual(self.q, self.fsa.letter("q"))
        self.assertEqual([self.p, self.q], self.fsa.sortedAlphabet())
        self.assertEqual(frozenset(["a1"]), self.fsa.successors("a0", self.q))
        self.assertEqual(frozenset(), self.fsa.successors("a1", self.q))
        self.assertEqual(frozenset(["a0", "a1"]), self.fsa.step(["a0"], [self.p, self.q]))
        with self.assertRaises(AlphabetError):
            self.fsa.letter("z")

    def testTransitionOrder(self):
        edges = [(s, a.name, t) for (s, a, t) in self.fsa.getTransitions()]
        self.assertEqual([("a0", "p", "a0"), ("a0", "q", "a1")], edges)

    def testInvariants(self):
        with self.assertRaises(AutomatonError):
            FormulaFsa([self.p], ["a0"], {}, "zz", [])
        with self.assertRaises(AutomatonError):
            FormulaFsa([self.p], ["a0"], {("a0", self.p): ["a9"]}, "a0", [])
        with self.assertRaises(AlphabetError):
            FormulaFsa([self.p], ["a0"], {("a0", self.q): ["a0"]}, "a0", [])
        with self.assertRaises(AutomatonError):
            FormulaFsa([self.p], ["a0", "a1"], {}, "a0", [], stateIndex={"a0": 0, "a1": 2})

    def testEquality(self):
        same = FormulaFsa(
            [self.q, self.p],
            ["a0", "a1"],
            {("a0", self.q): ["a1"], ("a0", self.p): ["a0"]},
            "a0",
            ["a1"],
        )
        self.assertEqual(self.fsa, same)


if __name__ == '__main__':
    suite = TestSuite()
    suite.addTest(TestFormulaFsa("testAccessors"))
    suite.addTest(TestFormulaFsa("testTransitionOrder"))
    suite.addTest(TestFormulaFsa("testInvariants"))
    suite.addTest(TestFormulaFsa("testEquality"))
    runner = TextTestRunner()
    runner.run(suite)
