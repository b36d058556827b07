import unittest
import sys
import os

import numpy as np

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from src.brauerwalk.core.configuration import Germ
from src.brauerwalk.oracle.modules import SyzygyOracle
from src.brauerwalk.strings.homs import AdmissiblePair, Span, hom_basis, stable_hom_basis
from src.brauerwalk.strings.modules import string_module
from src.brauerwalk.strings.words import concat, make_string
from tests.fixtures import load_algebra


class TestWords(unittest.TestCase):

    def setUp(self):
        self.alg = load_algebra('ex_gws')

    def word(self, text: str):
        return make_string(self.alg, self.alg.parse_word(text))

    def test_hat_source_and_target(self):

        sym = self.alg.parse_symbol('y4.v2')
        self.assertEqual(self.alg.hat_source(sym), Germ('y4', 0))
        self.assertEqual(self.alg.hat_target(sym), Germ('y1', 0))
        back = sym.inverted()
        self.assertEqual(self.alg.hat_source(back), Germ('y1', 0))
        self.assertEqual(self.alg.hat_target(back), Germ('y4', 0))

    def test_relations(self):

        self.assertTrue(self.alg.string_avoids_relations(self.alg.parse_word("x.v2 y4.v2")))
        self.assertFalse(self.alg.string_avoids_relations(self.alg.parse_word("x.v2 y4.v7")))
        self.assertFalse(self.alg.string_avoids_relations(self.alg.parse_word("y6.v2 x.v2 y4.v2 y1.v2")))

    def test_concat(self):

        joined = concat(self.alg, self.word("x.v2"), self.word("y4.v2"))
        self.assertEqual(joined, self.word("x.v2 y4.v2"))
        self.assertIsNone(concat(self.alg, self.word("x.v2"), self.word("y4.v7")))
        self.assertIsNone(concat(self.alg, self.word("y4.v2"), self.word("x.v2")))


class TestHomBases(unittest.TestCase):

    def setUp(self):
        self.alg = load_algebra('ex_gws')
        self.oracle = SyzygyOracle(self.alg)
        self.long = make_string(self.alg, self.alg.parse_word("x.v2 y4.v2"))
        self.short = make_string(self.alg, self.alg.parse_word("x.v2"))

    def test_quotient_map(self):

        pairs = hom_basis(self.alg, self.long, self.short)
        self.assertEqual(pairs, [AdmissiblePair(Span(0, 1), Span(0, 1), False)])
        self.assertEqual(hom_basis(self.alg, self.short, self.long), [])

    def test_basis_matches_the_oracle(self):

        for w, w2 in ((self.long, self.short), (self.short, self.long), (self.long, self.long)):
            M = string_module(self.alg, w)
            N = string_module(self.alg, w2)
            self.assertEqual(len(hom_basis(self.alg, w, w2)), self.oracle.hom_dimension(M, N))
            self.assertEqual(len(self.oracle.hom_space(M, N)), self.oracle.hom_dimension(M, N))

    def test_hom_space_elements_intertwine(self):

        M = string_module(self.alg, self.long)
        N = string_module(self.alg, self.short)
        homs = self.oracle.hom_space(M, N)
        self.assertTrue(homs)
        for F in homs:
            self.assertTrue(self.oracle.is_homomorphism(M, N, F))
        self.assertFalse(self.oracle.is_homomorphism(N, M, np.ones((M.dim, N.dim), dtype=np.int64)))

    def test_stable_maps(self):

        self.assertEqual(len(stable_hom_basis(self.oracle, self.long, self.short)), 1)
        self.assertEqual(len(stable_hom_basis(self.oracle, self.long, self.long)), 1)


class TestSyzygyPowers(unittest.TestCase):

    def test_walk_period_returns_the_module(self):

        alg = load_algebra('ex_gws')
        oracle = SyzygyOracle(alg)
        M = string_module(alg, make_string(alg, alg.parse_word("y4.v2 y1.v2 y6.v2")))
        self.assertIs(oracle.syzygy_power(M, 0), M)
        self.assertTrue(oracle.is_isomorphic(oracle.syzygy_power(M, 6), M))
        self.assertFalse(oracle.is_isomorphic(oracle.syzygy_power(M, 3), M))


if __name__ == '__main__':
    unittest.main()
