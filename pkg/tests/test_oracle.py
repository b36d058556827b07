import unittest
import sys
import os

import numpy as np

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from src.brauerwalk.algebra.projectives import projective_module
from src.brauerwalk.core.errors import OracleError
from src.brauerwalk.oracle.field import (det_mod, inv_mod_mat, inv_mod_scalar, matmul_mod,
                                         nullspace_mod, rank_mod)
from src.brauerwalk.oracle.modules import Certainty, SyzygyOracle
from src.brauerwalk.strings.modules import simple_module, string_module
from src.brauerwalk.strings.words import make_string
from tests.fixtures import load_algebra


class TestPrimeField(unittest.TestCase):

    def test_rank_and_nullspace(self):

        A = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]], dtype=np.int64)
        self.assertEqual(rank_mod(A, 7), 2)
        N = nullspace_mod(A, 7)
        self.assertEqual(N.shape, (3, 1))
        self.assertFalse(np.any(matmul_mod(A, N, 7)))

    def test_determinant_and_inverse(self):

        A = np.array([[2, 1], [1, 1]], dtype=np.int64)
        self.assertEqual(det_mod(A, 5), 1)
        self.assertTrue(np.array_equal(matmul_mod(A, inv_mod_mat(A, 5), 5), np.eye(2, dtype=np.int64)))
        self.assertEqual(inv_mod_scalar(3, 7), 5)

    def test_errors(self):

        with self.assertRaises(OracleError):
            inv_mod_scalar(14, 7)
        with self.assertRaises(OracleError):
            det_mod(np.zeros((2, 3), dtype=np.int64), 7)
        with self.assertRaises(OracleError):
            inv_mod_mat(np.array([[1, 2], [2, 4]], dtype=np.int64), 7)


class TestSyzygyOracle(unittest.TestCase):

    def setUp(self):
        self.alg = load_algebra('ex_gws')
        self.oracle = SyzygyOracle(self.alg)

    def uniserial(self, text):
        return string_module(self.alg, make_string(self.alg, self.alg.parse_word(text)))

    def test_endomorphisms_of_a_projective(self):
        P = projective_module(self.alg, 'y4')
        self.assertEqual(self.oracle.hom_dimension(P, P), 2)

    def test_projective_cover(self):

        M = self.uniserial("y4.v2 y1.v2 y6.v2")
        cover = self.oracle.projective_cover(M)
        self.assertEqual(cover.summands, ['y4'])
        self.assertEqual(cover.projective.dim, 6)

    def test_syzygy_of_a_uniserial(self):

        M = self.uniserial("y4.v2 y1.v2 y6.v2")
        omega = self.oracle.syzygy(M)
        self.assertEqual(omega.dimension_vector(), {'y4': 1, 'y5': 1})
        verdict = self.oracle.compare(omega, self.uniserial("y5.v7"))
        self.assertTrue(verdict.isomorphic)
        self.assertEqual(verdict.certainty, Certainty.EXACT)

    def test_projectives_have_zero_syzygy(self):
        self.assertEqual(self.oracle.syzygy(projective_module(self.alg, 'x')).dim, 0)

    def test_non_isomorphic_modules(self):

        verdict = self.oracle.compare(simple_module(self.alg, 'x'), simple_module(self.alg, 'z'))
        self.assertFalse(verdict.isomorphic)
        self.assertEqual(verdict.reason, "dimension vectors differ")

        left = self.uniserial("y4.v2 y1.v2")
        right = simple_module(self.alg, 'y4').direct_sum(simple_module(self.alg, 'y1'))
        self.assertFalse(self.oracle.is_isomorphic(left, right))

    def test_grid_finds_invertible_combinations(self):

        shifted = np.stack([np.zeros((2, 2)), np.eye(2)]).astype(np.int64)
        F = self.oracle.grid_combination(shifted)
        self.assertIsNotNone(F)
        self.assertNotEqual(det_mod(F, self.oracle.prime), 0)
        projections = np.stack([np.diag([1, 0, 0]), np.diag([0, 1, 0]), np.diag([0, 0, 1])]).astype(np.int64)
        self.assertIsNotNone(self.oracle.grid_combination(projections))

    def test_grid_rejects_singular_pencils(self):

        units = []
        for i, j in ((0, 1), (0, 2), (1, 2)):
            E = np.zeros((3, 3), dtype=np.int64)
            E[i, j] = 1
            units.append(E)
        self.assertIsNone(self.oracle.grid_combination(np.stack(units)))

    def test_small_hom_spaces_are_decided_exactly(self):

        S = simple_module(self.alg, 'x').direct_sum(simple_module(self.alg, 'y4'))
        T = simple_module(self.alg, 'x').direct_sum(simple_module(self.alg, 'y1'))
        for left, right, expected in ((S, S, True), (S, T, False)):
            verdict = self.oracle.compare(left, right)
            self.assertEqual(verdict.isomorphic, expected)
            self.assertEqual(verdict.certainty, Certainty.EXACT)

    def test_local_endomorphism_rings(self):

        self.assertTrue(self.oracle.end_ring_is_local(self.uniserial("y4.v2 y1.v2 y6.v2")))
        S = simple_module(self.alg, 'x')
        self.assertFalse(self.oracle.end_ring_is_local(S.direct_sum(S)))

    def test_middle_term_of_a_split_sequence(self):

        left = self.uniserial("y5.v7")
        right = simple_module(self.alg, 'x')
        verdict = self.oracle.verify_middle_term(left.direct_sum(right), left, right)
        self.assertTrue(verdict.isomorphic)


if __name__ == '__main__':
    unittest.main()
