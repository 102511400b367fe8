import json
import os
import tempfile
import unittest

import helper
from hypothesis import given, settings
from hypothesis import strategies as st

from catalog.general_linear import general_linear_datum
from catalog.symplectic import symplectic_datum
from errors import InvalidDatumError, NotDominantError, UsageError
from root_datum import (
    build_root_datum,
    canonical_json,
    datum_from_dict,
    dominant_below,
    dominant_below_box,
    dominant_form,
    dominantize,
    dynkin_components,
    fingerprint,
    highest_roots,
    is_leq,
    lattice_quotients,
    load_datum,
    longest_element,
    pairing,
    pos_part_decompose,
    positive_roots,
    two_rho,
    two_rho_check,
    weyl_group_elements,
    weyl_orbit,
    weyl_orbit_with_witnesses,
)

GL3 = general_linear_datum(3)
GSP4 = symplectic_datum(2)
coweights3 = st.tuples(*[st.integers(min_value=-3, max_value=3)] * 3)


class BuildDatumTest(unittest.TestCase):

    def test_cartan_matrix(self):
        self.assertEqual(GL3.cartan_matrix, ((2, -1), (-1, 2)))
        self.assertEqual(sorted(sum(GSP4.cartan_matrix, ())), [-2, -1, 2, 2])

    def test_torus(self):
        torus = build_root_datum(2, [], [])
        self.assertEqual(torus.semisimple_rank, 0)
        self.assertEqual(positive_roots(torus), ())
        self.assertEqual(len(weyl_group_elements(torus)), 1)

    def test_default_labels(self):
        d = build_root_datum(1, [(2,)], [(1,)])
        self.assertEqual(d.labels, ("1",))

    def test_rejects_bad_input(self):
        bad = [
            (0, [], []),
            (2, [(1, -1)], []),
            (2, [(1, -1, 0)], [(1, -1, 0)]),
            (2, [(1, -1)], [(1, 1)]),
            (2, [(1, 0), (2, 0)], [(2, 0), (1, 0)]),
        ]
        for rank, roots, coroots in bad:
            with self.subTest(rank=rank, roots=roots):
                with self.assertRaises(InvalidDatumError):
                    build_root_datum(rank, roots, coroots)

    def test_dual_swaps_roles(self):
        self.assertEqual(GSP4.dual.simple_roots, GSP4.simple_coroots)
        self.assertEqual(GSP4.dual.dual, GSP4)


class PositiveRootsTest(unittest.TestCase):

    def test_counts(self):
        self.assertEqual(len(positive_roots(GL3)), 3)
        self.assertEqual(len(positive_roots(general_linear_datum(5))), 10)
        self.assertEqual(len(positive_roots(GSP4)), 4)
        self.assertEqual(len(positive_roots(symplectic_datum(3))), 9)

    def test_two_rho_of_gl3(self):
        self.assertEqual(two_rho_check(GL3), (2, 0, -2))
        self.assertEqual(two_rho(GL3), (2, 0, -2))

    def test_two_rho_pairs_to_two(self):
        for d in (GL3, GSP4, symplectic_datum(3), GSP4.dual):
            for i in d.index_set:
                self.assertEqual(pairing(d.simple_coroots[i], two_rho_check(d)), 2)
                self.assertEqual(pairing(two_rho(d), d.simple_roots[i]), 2)

    def test_levi_subsystem(self):
        self.assertEqual([p.root for p in positive_roots(GL3, [0])], [(1, -1, 0)])
        with self.assertRaises(UsageError):
            positive_roots(GL3, [5])

    def test_components_and_highest_roots(self):
        self.assertEqual(dynkin_components(GL3), [(0, 1)])
        highest = highest_roots(GL3)
        self.assertEqual([p.root for p in highest], [(1, 0, -1)])
        self.assertEqual(highest[0].height, 2)


class WeylGroupTest(unittest.TestCase):

    def test_group_orders(self):
        self.assertEqual(len(weyl_group_elements(GL3)), 6)
        self.assertEqual(len(weyl_group_elements(GSP4)), 8)
        self.assertEqual(len(weyl_group_elements(GL3, [1])), 2)

    def test_longest_element(self):
        w0 = longest_element(GL3)
        self.assertEqual(w0.act((1, 0, 0)), (0, 0, 1))
        self.assertEqual(w0.length, 3)
        self.assertTrue(longest_element(GL3, []).is_identity)

    def test_orbit(self):
        self.assertEqual(weyl_orbit(GL3, (1, 0, 0)), ((0, 0, 1), (0, 1, 0), (1, 0, 0)))
        self.assertEqual(len(weyl_orbit(GSP4, (1, 1, 1))), 4)

    def test_witness_words(self):
        for image, word in weyl_orbit_with_witnesses(GL3, (2, 1, 0)).items():
            self.assertEqual(GL3.weyl_element(word).act((2, 1, 0)), image)

    @given(coweights3)
    @settings(max_examples=60, deadline=None)
    def test_dominantize(self, coweight):
        dominant, w = dominantize(GL3, coweight)
        self.assertTrue(GL3.is_dominant(dominant))
        self.assertEqual(w.act(coweight), dominant)
        self.assertEqual(dominant, tuple(sorted(coweight, reverse=True)))
        self.assertIn(dominant, weyl_orbit(GL3, coweight))

    @given(coweights3)
    @settings(max_examples=40, deadline=None)
    def test_dominant_form_on_gsp4(self, coweight):
        dominant = dominant_form(GSP4, coweight)
        self.assertTrue(GSP4.is_dominant(dominant))
        for x in weyl_orbit(GSP4, coweight):
            self.assertEqual(dominant_form(GSP4, x), dominant)


class QuotientsAndOrderTest(unittest.TestCase):

    def test_gl_quotients(self):
        pi1, center = lattice_quotients(GL3)
        self.assertTrue(pi1.is_free_rank_one)
        self.assertTrue(center.is_free_rank_one)

    def test_sl2_quotients(self):
        pi1, center = lattice_quotients(build_root_datum(1, [(2,)], [(1,)]))
        self.assertTrue(pi1.is_trivial)
        self.assertEqual(center.torsion, (2,))

    def test_positive_part(self):
        self.assertEqual(pos_part_decompose(GL3, (1, 0, -1)), (1, 1))
        self.assertIsNone(pos_part_decompose(GL3, (-1, 0, 1)))
        self.assertIsNone(pos_part_decompose(GL3, (1, 0, 0)))
        self.assertTrue(is_leq(GL3, (1, 1, 0), (2, 0, 0)))
        self.assertFalse(is_leq(GL3, (2, 0, 0), (1, 1, 0)))

    def test_dominant_below(self):
        self.assertEqual(dominant_below(GL3, (2, 0, 0)), ((2, 0, 0), (1, 1, 0)))
        self.assertEqual(dominant_below(GL3, (2, 1, 0)), ((2, 1, 0), (1, 1, 1)))
        with self.assertRaises(NotDominantError):
            dominant_below(GL3, (0, 1, 0))

    @given(st.integers(0, 3), st.integers(0, 3), st.integers(-2, 2))
    @settings(max_examples=30, deadline=None)
    def test_box_scan_agrees(self, a, b, c):
        coweight = (c + a + b, c + b, c)
        self.assertEqual(dominant_below_box(GL3, coweight), dominant_below(GL3, coweight))


class DatumFileTest(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def test_round_trip(self):
        path = helper.write_file(self.directory.name, "gsp4.json", json.dumps(GSP4.to_dict()))
        d, raw = load_datum(path)
        self.assertEqual(d, GSP4)
        self.assertEqual(raw["rank"], 3)
        self.assertEqual(datum_from_dict(json.loads(canonical_json(GL3))), GL3)

    def test_malformed_files(self):
        path = helper.write_file(self.directory.name, "broken.json", "{not json")
        with self.assertRaises(InvalidDatumError):
            load_datum(path)
        with self.assertRaises(InvalidDatumError):
            datum_from_dict({"rank": 2})
        with self.assertRaises(InvalidDatumError):
            datum_from_dict([1, 2])
        with self.assertRaises(OSError):
            load_datum(os.path.join(self.directory.name, "missing.json"))

    def test_fingerprint(self):
        self.assertEqual(fingerprint(GL3), fingerprint(general_linear_datum(3)))
        self.assertNotEqual(fingerprint(GL3), fingerprint(GSP4))
        self.assertEqual(len(fingerprint(GL3)), 16)


if __name__ == "__main__":
    unittest.main()
