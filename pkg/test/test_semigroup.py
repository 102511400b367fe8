import unittest

import helper
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import NotDominantError, UsageError
from root_datum import scale
from semigroup import (
    contains,
    divisor_scheme_dimension,
    dual_cone_verify,
    dual_semigroup_contains,
    free_coordinates,
    hilbert_basis,
    level_set,
    level_sets,
    special_coordinates,
)


class LevelSetTest(unittest.TestCase):

    def setUp(self):
        self.gl2 = helper.catalog("gl", 2)
        self.gl3 = helper.catalog("gl", 3)

    def test_small_levels(self):
        self.assertEqual(level_set(self.gl2, 0).elements, ((0, 0),))
        self.assertEqual(level_set(self.gl2, 1).elements, ((1, 0),))
        self.assertEqual(level_set(self.gl2, 2).elements, ((1, 1), (2, 0)))
        self.assertIn((1, 1, 0), level_set(self.gl3, 2))
        self.assertEqual(len(level_sets(self.gl3, 3)), 4)

    def test_negative_level(self):
        with self.assertRaises(ValueError):
            level_set(self.gl2, -1)

    @given(st.integers(min_value=1, max_value=4))
    @settings(max_examples=4, deadline=None)
    def test_levels_inside_semigroup(self, k):
        for mu in level_set(self.gl3, k).elements:
            self.assertTrue(contains(self.gl3, mu))
            self.assertEqual(self.gl3.degree(mu), k)

    def test_membership(self):
        self.assertTrue(contains(self.gl3, (1, 1, 1)))
        self.assertFalse(contains(self.gl3, (0, 0, -1)))
        with self.assertRaises(NotDominantError):
            contains(self.gl3, (0, 1, 0))


class DualConeTest(unittest.TestCase):

    def setUp(self):
        self.gl3 = helper.catalog("gl", 3)

    def test_special_weights(self):
        a = self.gl3
        self.assertEqual(special_coordinates(a, a.omega0), (1, 0, 0))
        self.assertTrue(dual_semigroup_contains(a, a.omega0))
        self.assertFalse(dual_semigroup_contains(a, scale(-1, a.omega0)))
        for weight in a.omega_i:
            self.assertTrue(dual_semigroup_contains(a, weight))

    def test_verified(self):
        for name, n in (("gl", 3), ("gsp", 2), ("gspin", 2)):
            with self.subTest(name=name, n=n):
                verdict = dual_cone_verify(helper.catalog(name, n), 3)
                self.assertTrue(verdict.verified)
                self.assertGreater(verdict.checked_coweights, 0)

    def test_wrong_basis_detected(self):
        a = self.gl3
        verdict = dual_cone_verify(a, 2, basis=[scale(-1, a.omega0)] + list(a.omega_i))
        self.assertFalse(verdict.verified)
        self.assertTrue(verdict.pairing_counterexamples)


class HilbertBasisTest(unittest.TestCase):

    def test_general_linear(self):
        for n in (2, 3, 4):
            with self.subTest(n=n):
                report = hilbert_basis(helper.catalog("gl", n), n + 1)
                expected = [list(helper.named("gl", n)[f"gamma_{i}"]) for i in range(1, n + 1)]
                self.assertEqual(report.generators, expected)
                self.assertEqual(report.degrees, list(range(1, n + 1)))
                self.assertTrue(report.is_free)
                self.assertTrue(report.verified)

    def test_symplectic(self):
        named = helper.named("gsp", 2)
        report = hilbert_basis(helper.catalog("gsp", 2), 4)
        expected = sorted(list(named[k]) for k in ("gamma", "gamma_1", "omega"))
        self.assertEqual(sorted(report.generators), expected)
        self.assertEqual(sorted(report.degrees), [1, 2, 2])
        self.assertTrue(report.is_free)

    def test_spin(self):
        named = helper.named("gspin", 2)
        report = hilbert_basis(helper.catalog("gspin", 2), 4)
        expected = sorted(list(named[k]) for k in ("gamma_1", "gamma_2", "omega"))
        self.assertEqual(sorted(report.generators), expected)
        self.assertTrue(report.is_free)

    def test_degree_bound(self):
        a = helper.catalog("gl", 2)
        with self.assertRaises(UsageError):
            hilbert_basis(a, 0)
        with self.assertRaises(UsageError):
            level_sets(a, -1)
        with self.assertRaises(UsageError):
            dual_cone_verify(a, 0)
        with self.assertRaises(UsageError):
            dual_cone_verify(a, 2, box_radius=-1)


class FreeCoordinatesTest(unittest.TestCase):

    def setUp(self):
        self.gl3 = helper.catalog("gl", 3)
        self.generators = [(1, 0, 0), (1, 1, 0), (1, 1, 1)]

    def test_coordinates(self):
        self.assertEqual(free_coordinates(self.gl3, (2, 1, 0), self.generators), (1, 1, 0))
        self.assertIsNone(free_coordinates(self.gl3, (0, 1, 0), self.generators))

    def test_divisor_scheme_dimension(self):
        self.assertEqual(divisor_scheme_dimension(self.gl3, 1, (0, 0, 0), self.generators), 1)
        self.assertEqual(divisor_scheme_dimension(self.gl3, 2, (1, 1, 0), self.generators), 2)


if __name__ == "__main__":
    unittest.main()
