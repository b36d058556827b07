import unittest
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from src.brauerwalk.core.configuration import BrauerConfig, Germ, germ_conservation
from src.brauerwalk.core.errors import ConfigurationError, InputError
from tests.fixtures import load_config


class TestConfiguration(unittest.TestCase):

    def setUp(self):
        self.cfg = load_config('ex_gws')

    def test_fixture_is_valid(self):

        diagnostics = self.cfg.validate()
        self.assertTrue(diagnostics.is_empty, diagnostics.to_list())
        self.assertTrue(self.cfg.is_connected())
        self.assertFalse(self.cfg.is_brauer_graph())

    def test_germ_conservation(self):

        for name in ('ex_gws', 'ex_wchi', 'ex_steps', 'ex_quad', 'ex_tri'):
            by_vertex, by_polygon, total = germ_conservation(load_config(name))
            self.assertEqual(by_vertex, by_polygon)
            self.assertEqual(by_polygon, total)

    def test_sigma_follows_the_cyclic_order(self):

        cfg = self.cfg
        y4_v7 = cfg.resolve_germ_ref('y4.v7')
        self.assertEqual(cfg.sigma(y4_v7), cfg.resolve_germ_ref('y5.v7'))
        self.assertEqual(cfg.sigma(cfg.resolve_germ_ref('y1.v2')), cfg.resolve_germ_ref('y6.v2'))
        for g in cfg.germs():
            self.assertEqual(cfg.sigma_inv(cfg.sigma(g)), g)
            self.assertEqual(cfg.kappa(cfg.sigma(g)), cfg.kappa(g))
            self.assertEqual(cfg.sigma_power(g, cfg.valency(cfg.kappa(g))), g)

    def test_valency_one_is_a_fixed_point(self):
        g = self.cfg.resolve_germ_ref('y1.v1')
        self.assertEqual(self.cfg.sigma(g), g)

    def test_truncation(self):

        cfg = load_config('ex_steps')
        truncated = sorted(x for x in cfg.polygon_ids if cfg.is_truncated_polygon(x))
        self.assertEqual(truncated, ['y1', 'y7', 'y8'])
        self.assertFalse(cfg.is_truncated_vertex('u2'))
        self.assertFalse(cfg.is_truncated_polygon('z'))

    def test_truncation_axiom_violation(self):

        cfg = BrauerConfig.from_dicts(
            {'a': 1, 'b': 2, 'c': 1},
            {'x': ['a', 'b', 'c'], 'e': ['a', 'b']},
            {'a': [Germ('x', 0), Germ('e', 0)], 'b': [Germ('x', 1), Germ('e', 1)]}
        )
        self.assertIn('truncation-axiom', cfg.validate().codes())
        with self.assertRaises(ConfigurationError):
            cfg.require_valid()

    def test_incomplete_order(self):

        cfg = BrauerConfig.from_dicts(
            {'a': 1, 'b': 1, 'c': 1},
            {'e': ['a', 'b'], 'f': ['a', 'c']},
            {'a': [Germ('e', 0)]}
        )
        self.assertIn('order-incomplete', cfg.validate().codes())

    def test_multiplicity_cap(self):

        cfg = self.cfg.with_multiplicities({'v7': 40})
        self.assertIn('multiplicity-range', cfg.validate().codes())

    def test_germ_references(self):

        cfg = load_config('ex_wchi')
        self.assertEqual(cfg.resolve_germ_ref('z2.T.2'), Germ('z2', 2))
        self.assertEqual(cfg.germ_ref(Germ('z2', 1)), 'z2.T.1')
        self.assertTrue(cfg.is_self_folded('z2'))
        with self.assertRaises(InputError):
            cfg.resolve_germ_ref('z2.T')
        with self.assertRaises(InputError):
            cfg.resolve_germ_ref('nowhere.T')

    def test_exceptional_configuration(self):

        cfg = BrauerConfig.from_dicts({'a': 1, 'b': 1}, {'e': ['a', 'b']})
        self.assertTrue(cfg.validate().is_empty)
        self.assertTrue(cfg.is_exceptional())


if __name__ == '__main__':
    unittest.main()
