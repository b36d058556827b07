import unittest
import sys
import os

import numpy as np

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from src.brauerwalk.algebra.projectives import build_projective, projective_module
from src.brauerwalk.algebra.quiver_algebra import build_algebra
from src.brauerwalk.core.generators import random_configuration
from src.brauerwalk.dtriples.triples import dtriple_conflicts, find_dtriples
from src.brauerwalk.dtriples.wchi import enumerate_wchi, tau_word
from src.brauerwalk.oracle.modules import SyzygyOracle
from src.brauerwalk.strings.modules import string_module
from src.brauerwalk.walks.hyperwalk import (WalkStatus, all_steps, periodic_walks, quadserial_violations,
                                            triserial_violations, walk)
from src.brauerwalk.walks.resolution import omega, omega_inv, realize

SEED = 20240611
RUNS = 50
WCHI_LEN = 8


class TestRandomConfigurations(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        rng = np.random.default_rng(SEED)
        cls.configs = [random_configuration(rng, max_polygons=8, max_multiplicity=3) for _ in range(RUNS)]

    def test_generated_configurations_are_valid(self):

        for cfg in self.configs:
            self.assertTrue(cfg.validate().is_empty, cfg.validate().to_list())
            self.assertTrue(cfg.is_connected())
            self.assertLessEqual(len(cfg.polygon_ids), 8)
            self.assertTrue(all(cfg.multiplicity(v) <= 3 for v in cfg.vertex_ids))

    def test_germs_are_conserved(self):

        for cfg in self.configs:
            at_vertices = sum(len(cfg.germs_at(v)) for v in cfg.vertex_ids)
            self.assertEqual(at_vertices, len(cfg.germs()))

    def test_projectives_are_modules(self):

        for cfg in self.configs:
            alg = build_algebra(cfg)
            for x in alg.vertices:
                P = projective_module(alg, x)
                self.assertEqual(P.dim, build_projective(alg, x).dimension)
                self.assertTrue(P.is_module_over(alg), x)

    def test_omega_is_a_bijection(self):

        for cfg in self.configs:
            alg = build_algebra(cfg)
            for step in all_steps(cfg):
                self.assertEqual(omega(alg, omega_inv(alg, step)).germs, step.germs)

    def test_every_walk_ends_or_repeats(self):

        for cfg in self.configs:
            for step in all_steps(cfg):
                report = walk(cfg, step)
                self.assertIn(report.status, (WalkStatus.PERIODIC, WalkStatus.TERMINATING))
                if report.status is WalkStatus.PERIODIC:
                    self.assertEqual(report.period, len(report.steps))

    def test_syzygy_follows_periodic_walks(self):

        for n, cfg in enumerate(self.configs):
            alg = build_algebra(cfg)
            oracle = SyzygyOracle(alg)
            for report in periodic_walks(cfg)[:1]:
                if quadserial_violations(cfg, report) or triserial_violations(cfg, report):
                    continue
                for i in range(report.period):
                    M = realize(alg, omega_inv(alg, report.step_at(i)), oracle.prime)
                    following = realize(alg, omega_inv(alg, report.step_at(i + 1)), oracle.prime)
                    self.assertTrue(oracle.is_isomorphic(oracle.syzygy(M), following),
                                    f"configuration {n}, step {i}")

    def test_second_syzygy_of_w_strings(self):

        for n, cfg in enumerate(self.configs):
            triples = find_dtriples(cfg)
            if not triples or dtriple_conflicts(triples):
                continue
            alg = build_algebra(cfg)
            oracle = SyzygyOracle(alg)
            for ws in enumerate_wchi(alg, WCHI_LEN, triples)[:2]:
                M = string_module(alg, ws.word, oracle.prime)
                tau = string_module(alg, tau_word(alg, ws).word, oracle.prime)
                self.assertTrue(oracle.is_isomorphic(oracle.syzygy_power(M, 2), tau),
                                f"configuration {n}, {ws.label(alg)}")


if __name__ == '__main__':
    unittest.main()
