import unittest
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from src.brauerwalk.core.configuration import step_from_refs
from src.brauerwalk.core.errors import StringError
from src.brauerwalk.oracle.modules import SyzygyOracle
from src.brauerwalk.strings.words import make_string, vertices_along
from src.brauerwalk.walks.hyperwalk import all_steps, step_of
from src.brauerwalk.walks.resolution import (MChiClass, check_trace, descriptor_from_word, omega,
                                             omega_inv, realize, resolution)
from tests.fixtures import load_algebra


class TestModuleFamily(unittest.TestCase):

    def setUp(self):
        self.alg = load_algebra('ex_gws')
        self.cfg = self.alg.cfg

    def step(self, *refs):
        return step_of(self.cfg, step_from_refs(self.cfg, refs))

    def test_omega_is_a_bijection_on_steps(self):

        for step in all_steps(self.cfg):
            m = omega_inv(self.alg, step)
            self.assertEqual(omega(self.alg, m).germs, step.germs)
            self.assertTrue(realize(self.alg, m).is_module_over(self.alg))

    def test_classes(self):

        m = omega_inv(self.alg, self.step('y1.v1'))
        self.assertIs(m.mclass, MChiClass.M0)
        self.assertEqual(m.label(self.alg), 'S(y1)')

        m = omega_inv(self.alg, self.step('y4.v2'))
        self.assertIs(m.mclass, MChiClass.M1)
        self.assertEqual(vertices_along(self.alg, m.word), ['y4', 'y1', 'y6', 'x'])

        m = omega_inv(self.alg, self.step('x.v3', 'x.v5'))
        self.assertIs(m.mclass, MChiClass.M2)
        self.assertEqual(vertices_along(self.alg, m.word), ['y2', 'x', 'y3'])

        m = omega_inv(self.alg, self.step('y2.v3', 'y3.v5'))
        self.assertIs(m.mclass, MChiClass.M3)

    def test_words_outside_the_family(self):

        short = make_string(self.alg, self.alg.parse_word("y4.v2 y1.v2"))
        with self.assertRaises(StringError):
            descriptor_from_word(self.alg, short)
        m = descriptor_from_word(self.alg, make_string(self.alg, self.alg.parse_word("y4.v2 y1.v2 y6.v2")))
        self.assertIs(m.mclass, MChiClass.M1)


class TestResolution(unittest.TestCase):

    def setUp(self):
        self.alg = load_algebra('ex_gws')
        self.cfg = self.alg.cfg

    def start(self, ref):
        return omega_inv(self.alg, step_of(self.cfg, step_from_refs(self.cfg, [ref])))

    def test_periodic_resolution(self):

        trace = resolution(self.alg, self.start('y4.v2'), 8)
        self.assertTrue(trace.periodic)
        self.assertEqual(trace.projective_sequence(), [
            ('y4',), ('y5',), ('y6',), ('x',), ('y2', 'y3'), ('x',), ('y4',), ('y5',)
        ])
        self.assertEqual(trace.to_dict(self.alg)['period'], 6)

    def test_terminating_resolution(self):

        trace = resolution(self.alg, self.start('y1.v2'), 8)
        self.assertFalse(trace.periodic)
        self.assertEqual(trace.projective_sequence(), [('y1',), ('y1',), ('y6',), ('z',)])
        self.assertIn('z.u1', trace.note)

    def test_oracle_confirms_every_syzygy(self):

        trace = resolution(self.alg, self.start('y4.v2'), 7)
        checks = check_trace(SyzygyOracle(self.alg), self.alg, trace)
        self.assertEqual(len(checks), 6)
        for check in checks:
            self.assertTrue(check.cover_matches, check.index)
            self.assertTrue(check.isomorphic, check.index)

    def test_oracle_on_the_terminating_prefix(self):

        trace = resolution(self.alg, self.start('y1.v2'), 8)
        checks = check_trace(SyzygyOracle(self.alg), self.alg, trace)
        self.assertTrue(all(c.ok for c in checks))


if __name__ == '__main__':
    unittest.main()
