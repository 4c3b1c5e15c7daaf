# -*- coding: utf-8 -*-

import itertools
import os.path
from unittest import TestCase, TestSuite, TextTestRunner

from stickerlib.algo.Automata import accepts_run, accepts_trace, build_formula_fsa, first_emission_word
from stickerlib.algo.Automata import emission_word, fsa_accepts, least_accepted_word, relabel
from stickerlib.algo.Oracle import word_satisfies
from stickerlib.algo.Synthetics import allValuations
from stickerlib.core.Errors import AlphabetError, RelabelError
from stickerlib.core.Formula import FINALLY, GLOBALLY, NEXT, PHI1, UNTIL, WEAK_NEXT, LtlObligation
from stickerlib.core.Logic import Literal, Valuation, emittable_letters, makeLetter
from stickerlib.core.SystemModel import RunPath, Word
from stickerlib.io.ModelReader import ModelReader


def word(fsa, names):
    return Word.fromNames(names, fsa.alphabet)


class TestAutomata(TestCase):

    def setUp(self):
        self.resource_path = os.path.join(os.path.split(__file__)[0], "../..")
        self.m1 = ModelReader.readFromFile(os.path.join(self.resource_path, "data/models/m1.lfsa"))
        self.p = Literal("p")
        self.q = Literal("q")
        self.until = LtlObligation(UNTIL, self.p, self.q)
        self.phi1 = LtlObligation(PHI1, self.p.negate(), self.q.negate())
        self.a1 = build_formula_fsa(self.phi1)

    def testUntil(self):
        a = build_formula_fsa(self.until)
        self.assertEqual(2, a.numberOfStates())
        self.assertEqual({"p", "q"}, {x.name for x in a.alphabet})
        for names in (["q"], ["p", "q"], ["p", "p", "q"], ["p", "p", "p", "q"]):
            self.assertTrue(fsa_accepts(a, word(a, names)))
        for names in ([], ["p"], ["q", "p"], ["q", "q"]):
            self.assertFalse(fsa_accepts(a, word(a, names)))

    def testClosedUntil(self):
        a = build_formula_fsa(self.until, closed=True)
        self.assertEqual({"p", "q", "r"}, {x.name for x in a.alphabet})
        self.assertTrue(fsa_accepts(a, word(a, ["q", "p", "r"])))
        self.assertFalse(fsa_accepts(a, word(a, ["p", "r", "q"])))

    def testPhi1Transitions(self):
        edges = [(self.a1.index(s), x.name, self.a1.index(t)) for (s, x, t) in self.a1.getTransitions()]
        self.assertEqual([(0, "s", 0), (0, "u", 1), (0, "s", 2), (1, "s", 1), (1, "q", 2)], edges)
        self.assertEqual(3, self.a1.numberOfStates())

    def testPhi1Words(self):
        self.assertTrue(fsa_accepts(self.a1, word(self.a1, ["s", "u", "q"])))
        self.assertFalse(fsa_accepts(self.a1, word(self.a1, ["q"])))
        closed = build_formula_fsa(self.phi1, closed=True)
        self.assertEqual(4, closed.numberOfStates())
        self.assertTrue(fsa_accepts(closed, word(closed, ["u", "q", "s"])))
        self.assertFalse(fsa_accepts(self.a1, word(self.a1, ["u", "q", "s"])))

    def testGlobally(self):
        a = build_formula_fsa(LtlObligation(GLOBALLY, self.p))
        self.assertEqual(1, a.numberOfStates())
        self.assertTrue(fsa_accepts(a, Word()))
        self.assertTrue(fsa_accepts(a, word(a, ["p", "p", "p"])))

    def testNext(self):
        a = build_formula_fsa(LtlObligation(NEXT, self.p))
        self.assertFalse(fsa_accepts(a, word(a, ["p"])))
        self.assertTrue(fsa_accepts(a, word(a, ["r", "p"])))
        self.assertFalse(fsa_accepts(a, word(a, ["p", "r", "p"])))

    def testWeakNext(self):
        a = build_formula_fsa(LtlObligation(WEAK_NEXT, self.p))
        self.assertEqual(3, a.numberOfStates())
        self.assertEqual(["x1", "x2"], sorted(a.accepting))
        self.assertTrue(fsa_accepts(a, word(a, ["p"])))
        self.assertTrue(fsa_accepts(a, word(a, ["r"])))
        self.assertTrue(fsa_accepts(a, word(a, ["r", "p", "r"])))
        self.assertFalse(fsa_accepts(a, word(a, ["p", "r"])))
        self.assertFalse(fsa_accepts(a, Word()))
        negated = build_formula_fsa(LtlObligation(WEAK_NEXT, self.p.negate()))
        self.assertTrue(fsa_accepts(negated, word(negated, ["p"])))
        self.assertFalse(fsa_accepts(negated, word(negated, ["r", "p"])))

    def testRelabelGlobally(self):
        a = build_formula_fsa(LtlObligation(GLOBALLY, self.p))
        r = makeLetter([self.p.negate()])
        b = relabel(a, {a.letter("p"): r})
        self.assertEqual({"r"}, {x.name for x in b.alphabet})
        self.assertEqual(build_formula_fsa(LtlObligation(GLOBALLY, self.p.negate())), b)
        self.assertFalse(accepts_run(b, RunPath(["0", "1", "2"], self.m1), self.m1))

    def testRelabelIdentity(self):
        a = build_formula_fsa(self.until)
        self.assertEqual(a, relabel(a, {x: x for x in a.alphabet}))
        self.assertEqual(a, relabel(a, {}))

    def testRelabelSwap(self):
        a = build_formula_fsa(LtlObligation(FINALLY, self.p))
        swapped = relabel(a, {a.letter("p"): a.letter("r"), a.letter("r"): a.letter("p")})
        self.assertEqual(build_formula_fsa(LtlObligation(FINALLY, self.p.negate())), swapped)

    def testRelabelErrors(self):
        a = build_formula_fsa(LtlObligation(FINALLY, self.p))
        with self.assertRaises(RelabelError):
            relabel(a, {makeLetter([self.q]): makeLetter([self.p])})
        with self.assertRaises(RelabelError):
            relabel(a, {a.letter("p"): a.letter("r")})

    def testRelabelPreservesAcceptance(self):
        x, y = Literal("x"), Literal("y")
        fin = build_formula_fsa(LtlObligation(FINALLY, self.p))
        swap = {fin.letter("p"): fin.letter("r"), fin.letter("r"): fin.letter("p")}
        fresh = {
            self.a1.letter("s"): makeLetter([y.negate()]),
            self.a1.letter("u"): makeLetter([x.negate(), y.negate()]),
            self.a1.letter("q"): makeLetter([y]),
        }
        for (a, sigma) in ((fin, swap), (self.a1, fresh)):
            b = relabel(a, sigma)
            self.assertEqual(a.numberOfStates(), b.numberOfStates())
            self.assertEqual(a.numberOfTransitions(), b.numberOfTransitions())
            for n in range(0, 7):
                for letters in itertools.product(a.sortedAlphabet(), repeat=n):
                    image = Word([sigma.get(letter, letter) for letter in letters])
                    self.assertEqual(fsa_accepts(a, Word(list(letters))), fsa_accepts(b, image))

    def testLetterNamesOverOtherPropositions(self):
        x, y = Literal("x"), Literal("y")
        a = build_formula_fsa(LtlObligation(PHI1, x.negate(), y.negate()))
        self.assertEqual({"!y", "!x&!y", "y"}, {z.name for z in a.alphabet})

    def testContradictoryLettersDropped(self):
        a = build_formula_fsa(LtlObligation(PHI1, self.p.negate(), self.p))
        self.assertEqual({"p", "r"}, {z.name for z in a.alphabet})
        self.assertEqual(4, a.numberOfTransitions())

    def testAcceptsRun(self):
        path = RunPath(["0", "1", "2"], self.m1)
        self.assertTrue(accepts_run(self.a1, path, self.m1))
        self.assertFalse(accepts_run(build_formula_fsa(self.until), path, self.m1))

    def testClosedAutomatonAbsorbsDecidedSuffix(self):
        trace = [
            Valuation({"p": False, "q": False}),
            Valuation({"p": False, "q": True}),
            Valuation({"p": False, "q": False}),
        ]
        self.assertFalse(accepts_trace(self.a1, trace))
        self.assertTrue(accepts_trace(build_formula_fsa(self.phi1, closed=True), trace))

    def testEmissionWord(self):
        path = RunPath(["0", "1", "2"], self.m1)
        self.assertEqual(["s", "u", "q"], emission_word(self.a1, path, self.m1).names())
        a = build_formula_fsa(self.until)
        self.assertIsNone(emission_word(a, path, self.m1))
        first = first_emission_word(a.alphabet, path.valuations(self.m1))
        self.assertIsNone(first)
        first = first_emission_word(self.a1.alphabet, path.valuations(self.m1))
        self.assertEqual(["s", "s", "q"], first.names())

    def testLeastAcceptedWordLongPath(self):
        path = RunPath(["0", "1", "0", "1", "2"], self.m1)
        w = least_accepted_word(self.a1, path.valuations(self.m1))
        self.assertEqual(["s", "s", "s", "u", "q"], w.names())

    def testForeignLetter(self):
        with self.assertRaises(AlphabetError):
            fsa_accepts(self.a1, Word([makeLetter([self.p])]))

    def testPhi1ComplementsUntilExhaustively(self):
        closed = build_formula_fsa(self.phi1, closed=True)
        valuations = allValuations()
        count = 0
        for n in range(1, 7):
            for trace in itertools.product(valuations, repeat=n):
                count += 1
                self.assertEqual(not word_satisfies(self.until, trace), accepts_trace(closed, trace))
        self.assertEqual(5460, count)

    def testReferenceMatchesClosedWhenQEndsTheTrace(self):
        valuations = allValuations()
        noQ = [v for v in valuations if not v["q"]]
        for g in (self.until, self.phi1):
            reference = build_formula_fsa(g)
            closed = build_formula_fsa(g, closed=True)
            for n in range(0, 5):
                for prefix in itertools.product(noQ, repeat=n):
                    for last in valuations:
                        trace = list(prefix) + [last]
                        self.assertEqual(accepts_trace(closed, trace), accepts_trace(reference, trace))

    def testClosedMatchesOracle(self):
        valuations = allValuations()
        kinds = [
            LtlObligation(FINALLY, self.p),
            LtlObligation(GLOBALLY, self.p.negate()),
            LtlObligation(NEXT, self.p),
            LtlObligation(NEXT, self.p.negate()),
            LtlObligation(WEAK_NEXT, self.p),
            LtlObligation(WEAK_NEXT, self.p.negate()),
            LtlObligation(GLOBALLY, self.p),
            LtlObligation(FINALLY, self.p.negate()),
            self.until,
            self.phi1,
        ]
        for g in kinds:
            a = build_formula_fsa(g, closed=True)
            for n in range(1, 7):
                for trace in itertools.product(valuations, repeat=n):
                    self.assertEqual(word_satisfies(g, trace), accepts_trace(a, trace), str(g))

    def testSingletonEmissionsMatchAcceptsTrace(self):
        valuations = allValuations(("p",))
        for g in (LtlObligation(FINALLY, self.p), LtlObligation(NEXT, self.p), LtlObligation(WEAK_NEXT, self.p)):
            a = build_formula_fsa(g, closed=True)
            for n in range(1, 7):
                for trace in itertools.product(valuations, repeat=n):
                    letters = [next(iter(emittable_letters(v, a.alphabet))) for v in trace]
                    self.assertEqual(accepts_trace(a, trace), fsa_accepts(a, Word(letters)), str(g))


if __name__ == '__main__':
    suite = TestSuite()
    suite.addTest(TestAutomata("testUntil"))
    suite.addTest(TestAutomata("testClosedUntil"))
    suite.addTest(TestAutomata("testPhi1Transitions"))
    suite.addTest(TestAutomata("testPhi1Words"))
    suite.addTest(TestAutomata("testGlobally"))
    suite.addTest(TestAutomata("testNext"))
    suite.addTest(TestAutomata("testWeakNext"))
    suite.addTest(TestAutomata("testRelabelGlobally"))
    suite.addTest(TestAutomata("testRelabelIdentity"))
    suite.addTest(TestAutomata("testRelabelSwap"))
    suite.addTest(TestAutomata("testRelabelErrors"))
    suite.addTest(TestAutomata("testRelabelPreservesAcceptance"))
    suite.addTest(TestAutomata("testLetterNamesOverOtherPropositions"))
    suite.addTest(TestAutomata("testContradictoryLettersDropped"))
    suite.addTest(TestAutomata("testAcceptsRun"))
    suite.addTest(TestAutomata("testClosedAutomatonAbsorbsDecidedSuffix"))
    suite.addTest(TestAutomata("testEmissionWord"))
    suite.addTest(TestAutomata("testLeastAcceptedWordLongPath"))
    suite.addTest(TestAutomata("testForeignLetter"))
    suite.addTest(TestAutomata("testPhi1ComplementsUntilExhaustively"))
    suite.addTest(TestAutomata("testReferenceMatchesClosedWhenQEndsTheTrace"))
    suite.addTest(TestAutomata("testClosedMatchesOracle"))
    suite.addTest(TestAutomata("testSingletonEmissionsMatchAcceptsTrace"))
    runner = TextTestRunner()
    runner.run(suite)
