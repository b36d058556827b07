import unittest
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from src.brauerwalk.api.platform import BrauerWalkPlatform, PlatformState
from src.brauerwalk.core.errors import InputError
from src.brauerwalk.core.settings import WalkerConfig, default_config
from tests.fixtures import fixture_path


class TestSettings(unittest.TestCase):

    def test_defaults(self):

        config = default_config({})
        self.assertEqual(config.prime, 32003)
        self.assertEqual(config.max_len, 24)
        self.assertEqual(config.validate(), [])

    def test_environment_overrides(self):

        config = default_config({'BRAUERWALK_SEED': '11', 'BRAUERWALK_PRIME': '65521',
                                 'BRAUERWALK_LOG_LEVEL': 'debug'})
        self.assertEqual((config.seed, config.prime, config.log_level), (11, 65521, 'debug'))

    def test_bad_environment(self):

        with self.assertRaises(InputError):
            default_config({'BRAUERWALK_SEED': 'eleven'})
        with self.assertRaises(InputError):
            default_config({'BRAUERWALK_PRIME': '32001'})

    def test_small_primes_are_rejected(self):
        self.assertTrue(WalkerConfig(prime=101).validate())

    def test_overrides_skip_none(self):
        config = WalkerConfig().with_overrides(seed=None, max_len=8)
        self.assertEqual((config.seed, config.max_len), (0, 8))


class TestPlatform(unittest.TestCase):

    def setUp(self):
        self.platform = BrauerWalkPlatform(WalkerConfig())

    def test_state_follows_loading(self):

        self.assertIs(self.platform.state, PlatformState.EMPTY)
        self.assertTrue(self.platform.load(fixture_path('ex_gws'))['success'])
        self.assertIs(self.platform.state, PlatformState.LOADED)
        self.assertTrue(self.platform.build()['success'])
        self.assertIs(self.platform.state, PlatformState.BUILT)

    def test_failures_are_reported(self):

        result = self.platform.load_text("vertex a\nvertex a\n")
        self.assertFalse(result['success'])
        self.assertEqual(result['kind'], 'BcfParseError')
        self.assertEqual(result['line'], 2)
        self.assertIs(self.platform.state, PlatformState.ERROR)

    def test_commands_need_a_configuration(self):
        result = self.platform.build()
        self.assertFalse(result['success'])
        self.assertIn('no configuration loaded', result['reason'])

    def test_build_summary(self):

        self.platform.load(fixture_path('ex_gws'))
        summary = self.platform.build()['algebra']
        self.assertEqual(len(summary['arrows']), 16)
        self.assertFalse(summary['exceptional'])

    def test_walk_without_structure_warnings(self):

        self.platform.load(fixture_path('ex_gws'))
        result = self.platform.walk('y4.v2')
        self.assertTrue(result['success'])
        self.assertNotIn('structure_warnings', result)

    def test_resolve_a_w_string(self):

        self.platform.load(fixture_path('ex_wchi'))
        result = self.platform.resolve("y1.B z1.E^-1 z1.O xp.F^-1 xp.G")
        self.assertTrue(result['success'], result.get('reason'))
        self.assertEqual(result['resolution']['case'], 'direct-direct')
        self.assertEqual(result['resolution']['period'], 4)

    def test_resolve_a_simple(self):

        self.platform.load(fixture_path('ex_gws'))
        result = self.platform.resolve('S(y1)', 3)
        self.assertTrue(result['success'], result.get('reason'))
        self.assertEqual(result['resolution']['module']['class'], 'M0')

    def test_render_kinds(self):

        self.platform.load(fixture_path('ex_gws'))
        self.assertTrue(self.platform.render('quiver')['dot'].startswith('digraph'))
        self.assertFalse(self.platform.render('walk')['success'])
        self.assertFalse(self.platform.render('svg')['success'])

    def test_verify(self):

        self.platform.load(fixture_path('ex_gws'))
        result = self.platform.verify(seed=3)
        self.assertTrue(result['success'], result['failures'])
        self.assertEqual(result['seed'], 3)
        self.assertEqual(result['summary']['hyperwalk-syzygy']['count'], 12)
        self.assertEqual(set(result['table'].columns), {'check', 'subject', 'verdict', 'certainty'})

    def test_verify_cross_checks_strings(self):

        self.platform.load(fixture_path('ex_gws'))
        result = self.platform.verify(seed=3, string_len=2)
        self.assertTrue(result['success'], result['failures'])
        for check in ('inverse-isomorphism', 'hom-count'):
            self.assertIn(check, result['summary'])
            row = result['summary'][check]
            self.assertEqual(row['count'], row['passed'])

    def test_stable_end_rows_for_w_strings(self):

        self.platform.load(fixture_path('ex_wchi'))
        table = self.platform.verification_table(seed=3, max_len=8, string_len=1)
        rows = table[table['check'] == 'stable-end-dimension']
        self.assertEqual(len(rows), 8)
        self.assertTrue(rows['verdict'].all())
        self.assertTrue(table[table['check'] == 'involution-laws']['verdict'].all())

    def test_ambiguous_d_triples_skip_w_string_checks(self):

        self.platform.load_text("vertex a\nvertex b\nvertex c\nvertex a1\nvertex b1\nvertex c1\n"
                                "polygon x : a b c\npolygon ya : a a1\npolygon yb : b b1\npolygon yc : c c1\n"
                                "order a : x.1 ya.1\norder b : x.1 yb.1\norder c : x.1 yc.1\n")
        table = self.platform.verification_table(seed=3, string_len=1)
        self.assertFalse(table['check'].isin(['involution-laws', 'wchi-syzygy']).any())
        self.assertFalse(self.platform.wchi()['success'])


if __name__ == '__main__':
    unittest.main()
