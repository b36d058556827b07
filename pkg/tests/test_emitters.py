import unittest
import json
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from src.brauerwalk.core.configuration import step_from_refs
from src.brauerwalk.io.emitters import (SCHEMA_VERSION, TOOL_VERSION, config_dot, emit_json,
                                        quiver_dot, walk_dot)
from src.brauerwalk.walks.hyperwalk import step_of, walk
from tests.fixtures import load_algebra, load_config

SCHEMA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                          'src', 'brauerwalk', 'io', 'schemas')


def required_keys(name: str):
    with open(os.path.join(SCHEMA_DIR, name), encoding='utf-8') as handle:
        return json.load(handle)['required']


class TestDotEmitters(unittest.TestCase):

    def setUp(self):
        self.cfg = load_config('ex_gws')

    def test_config_dot_is_byte_identical(self):

        first = config_dot(self.cfg)
        second = config_dot(load_config('ex_gws'))
        self.assertEqual(first, second)
        self.assertTrue(first.startswith("graph brauer {\n"))
        self.assertTrue(first.endswith("}\n"))

    def test_config_dot_content(self):

        dot = config_dot(self.cfg)
        self.assertIn('"v:u1" [shape=point, xlabel="u1 (m=2)"];', dot)
        self.assertIn('"p:y4":s0 -- "v:v2" [taillabel="2"];', dot)
        self.assertEqual(dot.count(' -- '), len(self.cfg.germs()))

    def test_walk_dot_marks_steps(self):

        report = walk(self.cfg, step_of(self.cfg, step_from_refs(self.cfg, ['y4.v2'])))
        dot = walk_dot(self.cfg, report)
        self.assertIn('"p:y4":s0 -- "v:v2" [taillabel="2", label="0", color=red, penwidth=2];', dot)
        self.assertIn('"p:x":s1 -- "v:v3" [taillabel="1", label="5", color=red, penwidth=2];', dot)
        self.assertEqual(dot.count('color=red'), 8)

    def test_quiver_dot(self):

        dot = quiver_dot(load_algebra('ex_gws'))
        self.assertTrue(dot.startswith("digraph quiver {\n"))
        self.assertEqual(dot.count(' -> '), 16)
        self.assertIn('"y4" -> "y1" [label="y4.v2"];', dot)


class TestJsonEnvelope(unittest.TestCase):

    def test_envelope(self):

        text = emit_json('walk', {'b': 1, 'a': [1, 2]}, 'abc')
        data = json.loads(text)
        for key in required_keys('report.json'):
            self.assertIn(key, data)
        self.assertEqual(data['version'], TOOL_VERSION)
        self.assertEqual(data['schema_version'], SCHEMA_VERSION)
        self.assertEqual(data['input_hash'], 'abc')
        self.assertLess(text.index('"a"'), text.index('"b"'))

    def test_stable_output(self):
        payload = {'z': {'y': 1, 'x': 2}, 'w': ['q']}
        self.assertEqual(emit_json('tubes', payload), emit_json('tubes', dict(reversed(list(payload.items())))))

    def test_walk_report_matches_schema(self):

        cfg = load_config('ex_gws')
        report = walk(cfg, step_of(cfg, step_from_refs(cfg, ['y1.v2']))).to_dict(cfg)
        for key in required_keys('walk.json'):
            self.assertIn(key, report)
        self.assertEqual(report['status'], 'terminating')


if __name__ == '__main__':
    unittest.main()
