import unittest
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from src.brauerwalk.core.configuration import Germ
from src.brauerwalk.core.errors import BcfParseError
from src.brauerwalk.io.bcf import load_bcf, parse_bcf, serialize_bcf
from tests.fixtures import fixture_path


class TestBcfParser(unittest.TestCase):

    def test_parse_fixture(self):

        doc = load_bcf(fixture_path('ex_gws'))
        cfg = doc.config
        self.assertEqual(len(cfg.vertex_ids), 11)
        self.assertEqual(len(cfg.polygon_ids), 8)
        self.assertEqual(cfg.multiplicity('u1'), 2)
        self.assertEqual(cfg.polygon_size('z'), 4)
        self.assertEqual(cfg.order('v2')[0], Germ('y6', 1))
        self.assertEqual(len(doc.content_hash), 64)
        self.assertEqual(doc.line_of('z'), doc.polygon_lines['z'])

    def test_comments_and_default_occurrence(self):

        doc = parse_bcf("vertex a   # first\nvertex b mult=3\n\npolygon e : a b\npolygon f : a b\norder a : e f.1\n")
        self.assertEqual(doc.config.multiplicity('b'), 3)
        self.assertEqual(doc.config.order('a'), (Germ('e', 0), Germ('f', 0)))

    def test_self_folded_occurrences(self):

        cfg = load_bcf(fixture_path('ex_wchi')).config
        self.assertEqual(cfg.order('T'), (Germ('z2', 1), Germ('z2', 2), Germ('xpp', 0)))

    def test_duplicate_vertex_points_at_first_declaration(self):

        with self.assertRaises(BcfParseError) as ctx:
            parse_bcf("vertex a\nvertex b\nvertex a\n")
        self.assertEqual(ctx.exception.line, 3)
        self.assertEqual(ctx.exception.related, 1)

    def test_undeclared_vertex(self):

        with self.assertRaises(BcfParseError) as ctx:
            parse_bcf("vertex a\npolygon e : a b\n")
        self.assertEqual(ctx.exception.line, 2)

    def test_foreign_germ_in_order(self):

        text = "vertex a\nvertex b\nvertex c\npolygon e : a b\npolygon f : b c\norder b : e f\norder a : f\n"
        with self.assertRaises(BcfParseError) as ctx:
            parse_bcf(text)
        self.assertEqual(ctx.exception.line, 7)
        self.assertEqual(ctx.exception.related, 5)

    def test_occurrence_out_of_range(self):

        text = "vertex a\nvertex b\npolygon e : a b\npolygon f : a b\norder a : e.2 f\n"
        with self.assertRaises(BcfParseError) as ctx:
            parse_bcf(text)
        self.assertEqual(ctx.exception.line, 5)

    def test_unknown_keyword_and_empty_input(self):

        with self.assertRaises(BcfParseError) as ctx:
            parse_bcf("vertex a\nedge e : a a\n")
        self.assertEqual(ctx.exception.line, 2)
        with self.assertRaises(BcfParseError):
            parse_bcf("# nothing here\n")

    def test_malformed_multiplicity(self):
        with self.assertRaises(BcfParseError):
            parse_bcf("vertex a m=2\n")

    def test_bad_fixture_parses_but_is_invalid(self):

        cfg = load_bcf(fixture_path('bad')).config
        codes = cfg.validate().codes()
        self.assertIn('truncation-axiom', codes)
        self.assertIn('order-incomplete', codes)

    def test_serialize_is_canonical(self):

        for name in ('ex_gws', 'ex_gws_m', 'ex_wchi', 'ex_steps', 'ex_quad', 'ex_tri'):
            cfg = load_bcf(fixture_path(name)).config
            text = serialize_bcf(cfg)
            again = parse_bcf(text).config
            self.assertEqual(serialize_bcf(again), text)
            self.assertEqual(again.vertices, cfg.vertices)
            self.assertEqual(again.polygons, cfg.polygons)
            for v in cfg.vertex_ids:
                self.assertEqual(again.canonical_order(v), cfg.canonical_order(v))


if __name__ == '__main__':
    unittest.main()
