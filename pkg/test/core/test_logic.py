# -*- coding: utf-8 -*-

import itertools
from unittest import TestCase, TestSuite, TextTestRunner

from stickerlib.algo.Synthetics import allValuations
from stickerlib.core.Errors import AlphabetError, InvalidLetterError
from stickerlib.core.Logic import Letter, Literal, Valuation
from stickerlib.core.Logic import checkAlphabet, emittable_letters, makeLetter
from stickerlib.core.CodeTable import tab3


class TestLogic(TestCase):

    def setUp(self):
        self.p = Literal("p")
        self.q = Literal("q")
        self.letters = {name: letter for name, letter in tab3().letters.items()}

    def testLiteral(self):
        self.assertEqual("!p", str(self.p.negate()))
        self.assertEqual(self.p, self.p.negate().negate())
        self.assertEqual(self.p, self.p.negate().positive())
        v = Valuation({"p": True, "q": False})
        self.assertTrue(self.p.holds(v))
        self.assertFalse(self.q.holds(v))
        self.assertTrue(self.q.negate().holds(v))

    def testValuation(self):
        v = Valuation({"q": False, "p": True})
        self.assertEqual("{p, !q}", str(v))
        self.assertEqual(["p"], v.trueProps())
        self.assertEqual(v, Valuation({"p": True, "q": False}))
        self.assertEqual(hash(v), hash(Valuation({"p": True, "q": False})))
        with self.assertRaises(AlphabetError):
            v["r"]

    def testLetterCondition(self):
        u = Letter("u", [self.p.negate(), self.q.negate()])
        self.assertEqual("!p&!q", u.conditionText())
        self.assertTrue(u.holds(Valuation({"p": False, "q": False})))
        self.assertFalse(u.holds(Valuation({"p": True, "q": False})))
        with self.assertRaises(InvalidLetterError):
            Letter("bad", [self.p, self.p.negate()])
        with self.assertRaises(AlphabetError):
            u.holds(Valuation({"p": False}))

    def testMakeLetter(self):
        self.assertEqual("u", makeLetter([self.q.negate(), self.p.negate()]).name)
        self.assertEqual("r", makeLetter([self.p.negate()]).name)
        self.assertEqual("!p&!q", makeLetter([self.p.negate(), self.q.negate()], aliases=False).name)
        self.assertEqual("!x&y", makeLetter([Literal("y"), Literal("x", True)]).name)
        self.assertEqual("p", makeLetter([self.p, self.p]).name)
        self.assertIsNone(makeLetter([self.p, self.p.negate()]))

    def testAlphabetNames(self):
        with self.assertRaises(InvalidLetterError):
            checkAlphabet([Letter("a", [self.p]), Letter("a", [self.q])])

    def testEmittableNoPropositionTrue(self):
        v = Valuation({"p": False, "q": False})
        names = {a.name for a in emittable_letters(v, self.letters.values())}
        self.assertEqual({"r", "s", "u"}, names)

    def testEmittableOnlyP(self):
        v = Valuation({"p": True, "q": False})
        alphabet = [self.letters["p"], self.letters["q"]]
        self.assertEqual({self.letters["p"]}, emittable_letters(v, alphabet))

    def testEmittableNone(self):
        v = Valuation({"p": True, "q": True})
        alphabet = [self.letters["s"], self.letters["u"]]
        self.assertEqual(frozenset(), emittable_letters(v, alphabet))

    def testContradictoryLettersNeverBothEmitted(self):
        letters = list(self.letters.values()) + [makeLetter([Literal("p"), Literal("q", True)], aliases=False)]
        for v in allValuations():
            emitted = emittable_letters(v, letters)
            for a, b in itertools.combinations(emitted, 2):
                clash = any(lit.negate() in b.condition for lit in a.condition)
                self.assertFalse(clash, str(a) + " and " + str(b) + " under " + str(v))

    def testEmittableMonotoneInAlphabet(self):
        letters = sorted(self.letters.values())
        subsets = [list(c) for n in range(len(letters) + 1) for c in itertools.combinations(letters, n)]
        for v in allValuations():
            for small in subsets:
                for extra in letters:
                    self.assertLessEqual(
                        emittable_letters(v, small), emittable_letters(v, small + [extra])
                    )


if __name__ == '__main__':
    suite = TestSuite()
    suite.addTest(TestLogic("testLiteral"))
    suite.addTest(TestLogic("testValuation"))
    suite.addTest(TestLogic("testLetterCondition"))
    suite.addTest(TestLogic("testMakeLetter"))
    suite.addTest(TestLogic("testAlphabetNames"))
    suite.addTest(TestLogic("testEmittableNoPropositionTrue"))
    suite.addTest(TestLogic("testEmittableOnlyP"))
    suite.addTest(TestLogic("testEmittableNone"))
    suite.addTest(TestLogic("testContradictoryLettersNeverBothEmitted"))
    suite.addTest(TestLogic("testEmittableMonotoneInAlphabet"))
    runner = TextTestRunner()
    runner.run(suite)
