import unittest
import sys
import os

import numpy as np

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from src.brauerwalk.algebra.quiver import Arrow, ArrowSymbol, BoundQuiver
from src.brauerwalk.core.errors import ClanWordOrderError, InputError, StringError
from src.brauerwalk.oracle.modules import SyzygyOracle
from src.brauerwalk.strings.clans import (ClanBandParams, ClanQuiver, KxyRep, band_letters,
                                          clan_band_module, clan_tube_layer, compare_words,
                                          mouth_reps, unfold_special_loop)


def small_clan() -> ClanQuiver:
    arrows = [Arrow('a', 'u', 'v'), Arrow('b', 'v', 'u'), Arrow('e', 'u', 'u'), Arrow('f', 'v', 'v')]
    return ClanQuiver(['u', 'v'], arrows, ['e', 'f'])


def scalar(value: int) -> np.ndarray:
    return np.array([[value]], dtype=np.int64)


class TestClannishBands(unittest.TestCase):

    def setUp(self):
        self.clan = small_clan()
        self.a = ArrowSymbol('a')

    def test_band_letters(self):

        params = ClanBandParams((self.a,), 'e', 'f', scalar(1), scalar(0))
        letters = band_letters(self.clan, params)
        self.assertEqual(letters, (ArrowSymbol('e'), self.a, ArrowSymbol('f'), self.a.inverted()))

    def test_band_module_dimensions(self):

        rep = KxyRep(np.eye(2, dtype=np.int64), np.zeros((2, 2), dtype=np.int64))
        M = clan_band_module(self.clan, ClanBandParams.from_rep((self.a,), 'e', 'f', rep))
        self.assertEqual(M.dim, 4)
        self.assertEqual(M.dimension_vector(), {'u': 2, 'v': 2})
        self.assertTrue(M.is_module_over(self.clan))

    def test_parameters_distinguish_bands(self):

        oracle = SyzygyOracle(self.clan)
        ones = clan_band_module(self.clan, ClanBandParams((self.a,), 'e', 'f', scalar(1), scalar(1)))
        zeros = clan_band_module(self.clan, ClanBandParams((self.a,), 'e', 'f', scalar(0), scalar(0)))
        self.assertFalse(oracle.is_isomorphic(ones, zeros))
        self.assertTrue(oracle.is_isomorphic(ones, ones))

    def test_special_letter_inside_the_word(self):

        word = (self.a, ArrowSymbol('f'), ArrowSymbol('b'))
        M = clan_band_module(self.clan, ClanBandParams(word, 'e', 'e', scalar(1), scalar(0)))
        self.assertEqual(M.dim, 4)
        self.assertTrue(M.is_module_over(self.clan))

    def test_invalid_bands(self):

        with self.assertRaises(StringError):
            clan_band_module(self.clan, ClanBandParams((self.a, ArrowSymbol('f'), self.a.inverted()),
                                                       'e', 'e', scalar(1), scalar(0)))
        with self.assertRaises(InputError):
            clan_band_module(self.clan, ClanBandParams((self.a,), 'e', 'f', scalar(2), scalar(0)))
        with self.assertRaises(InputError):
            clan_band_module(self.clan, ClanBandParams((self.a,), 'a', 'f', scalar(1), scalar(0)))

    def test_word_order(self):

        self.assertEqual(compare_words(self.clan, [ArrowSymbol('b', True)], [self.a]), 1)
        self.assertEqual(compare_words(self.clan, [self.a], [ArrowSymbol('b', True)]), -1)
        with self.assertRaises(ClanWordOrderError):
            compare_words(self.clan, [self.a], [self.a])

    def test_unfolding_splits_the_loop_vertex(self):

        M = clan_band_module(self.clan, ClanBandParams((self.a,), 'e', 'f', scalar(1), scalar(0)))
        target = BoundQuiver(['u+', 'u-', 'v'], [
            Arrow('a+', 'u+', 'v'), Arrow('a-', 'u-', 'v'), Arrow('b', 'v', 'u+'), Arrow('f', 'v', 'v')
        ])
        unfolded = unfold_special_loop(self.clan, M, 'e', 'a', target, 'u+', 'u-', 'a+', 'a-')
        self.assertEqual(unfolded.vertex_of, ('u+', 'v'))
        self.assertTrue(np.any(unfolded.matrix('a+')))
        self.assertFalse(np.any(unfolded.matrix('a-')))


class TestTubeLayers(unittest.TestCase):

    def test_layers_are_exact(self):

        for tube in (1, 2):
            for r in range(1, 7):
                layer = clan_tube_layer(r, tube)
                self.assertTrue(layer.is_exact(), (tube, r))
                self.assertTrue(layer.maps_are_homomorphisms(), (tube, r))
                for rep in (layer.left, layer.middle, layer.right):
                    self.assertTrue(rep.is_idempotent(32003))

    def test_mouths(self):

        left, right = mouth_reps(1)
        self.assertEqual((int(left.X[0, 0]), int(left.Y[0, 0])), (0, 0))
        self.assertEqual((int(right.X[0, 0]), int(right.Y[0, 0])), (1, 1))
        left, right = mouth_reps(2)
        self.assertEqual((int(left.X[0, 0]), int(left.Y[0, 0])), (0, 1))
        self.assertEqual((int(right.X[0, 0]), int(right.Y[0, 0])), (1, 0))

    def test_layer_arguments(self):

        with self.assertRaises(InputError):
            clan_tube_layer(0)
        with self.assertRaises(InputError):
            clan_tube_layer(2, tube=3)


if __name__ == '__main__':
    unittest.main()
