import unittest

import helper
from errors import UsageError
from levi import (
    contains_M_S,
    coweight_identities,
    decompose_certificate,
    general_position_decompositions,
    identities_agree,
    is_M_minuscule,
    levi_level_set,
    levi_test_coweights,
    levi_test_weights,
    pi1_plus,
    restrict_to_levi,
    standard_levis,
    theta_level,
    vanishing_bound,
    vanishing_counterexamples,
    w_M_orbit_count,
    weight_identities,
)
from root_datum import add


class LeviDatumTest(unittest.TestCase):

    def setUp(self):
        self.gl3 = helper.catalog("gl", 3)

    def test_standard_levis(self):
        self.assertEqual([L.subset for L in standard_levis(self.gl3)], [(), (0,), (1,), (0, 1)])
        self.assertEqual(len(standard_levis(self.gl3, proper_only=True)), 3)

    def test_restriction(self):
        L = restrict_to_levi(self.gl3, [0])
        self.assertTrue(L.is_proper)
        self.assertEqual(L.two_rho_check_M, (1, -1, 0))
        self.assertEqual(L.w0M.act((1, 0, 0)), (0, 1, 0))
        self.assertEqual(L.quotient.free_rank, 2)
        self.assertTrue(L.is_M_dominant((1, 0, 5)))
        self.assertTrue(L.leq_M((1, 1, 0), (2, 0, 0)))
        self.assertFalse(L.leq_M((1, 0, 1), (2, 0, 0)))
        with self.assertRaises(UsageError):
            restrict_to_levi(self.gl3, [3])

    def test_torus_order_is_equality(self):
        L = restrict_to_levi(self.gl3, [])
        self.assertTrue(L.leq_M((1, 0, 0), (1, 0, 0)))
        self.assertFalse(L.leq_M((1, 1, 0), (2, 0, 0)))


class IdentitiesTest(unittest.TestCase):

    def test_membership_identities_gl3(self):
        a = helper.catalog("gl", 3)
        for L in standard_levis(a):
            for x in levi_test_coweights(L, 2):
                values = coweight_identities(L, x)
                self.assertTrue(identities_agree(values), (L.subset, x, values))
            for w in levi_test_weights(L, 1):
                values = weight_identities(L, w)
                self.assertTrue(identities_agree(values), (L.subset, w, values))

    def test_minus_gamma_is_outside(self):
        a = helper.catalog("gl", 3)
        L = restrict_to_levi(a, [0])
        self.assertFalse(contains_M_S(L, (0, 0, -1)))
        self.assertTrue(contains_M_S(L, (1, 0, 0)))


class ThetaTest(unittest.TestCase):

    def setUp(self):
        self.gl3 = helper.catalog("gl", 3)
        self.L = restrict_to_levi(self.gl3, [0])

    def test_theta(self):
        theta = theta_level(self.L)
        self.assertEqual(sorted(theta.elements), [(0, 0, 1), (1, 0, 0)])
        self.assertEqual(w_M_orbit_count(self.L), 2)
        self.assertEqual(pi1_plus(self.L, 1), sorted(theta.images))
        self.assertEqual(theta.element_for(self.L.project((1, 0, 0))), (1, 0, 0))
        self.assertIsNone(theta.element_for((9, 9)))
        for x in theta.elements:
            self.assertTrue(is_M_minuscule(self.L, x))

    def test_borel_theta_is_the_orbit(self):
        a = helper.catalog("gsp", 2)
        theta = theta_level(restrict_to_levi(a, []))
        self.assertEqual(sorted(theta.elements), sorted(a.orbit))

    def test_level_set(self):
        self.assertIn((1, 1, 0), levi_level_set(self.L, 2))
        self.assertIn((1, 0, 1), levi_level_set(self.L, 2))
        self.assertNotIn((0, 1, 1), levi_level_set(self.L, 2))


class DecompositionTest(unittest.TestCase):

    def setUp(self):
        self.L = restrict_to_levi(helper.catalog("gl", 3), [0])

    def test_certificate(self):
        for coweight in ((1, 1, 0), (2, 0, 1), (1, 1, 1)):
            parts = decompose_certificate(self.L, coweight)
            self.assertEqual(len(parts), sum(coweight))
            total = (0, 0, 0)
            for x in parts:
                total = add(total, x)
            self.assertTrue(self.L.leq_M(coweight, total))

    def test_outside_semigroup(self):
        with self.assertRaises(UsageError):
            decompose_certificate(self.L, (0, 0, -1))

    def test_general_position(self):
        decompositions = general_position_decompositions(self.L, 2)
        self.assertEqual(len(decompositions), 3)
        self.assertTrue(all(m.general_position for m in decompositions))
        self.assertEqual(sorted(sum(n for n, _ in m.parts) for m in decompositions), [2, 2, 2])


class VanishingBoundTest(unittest.TestCase):

    def test_bound_counts_the_orbit(self):
        a = helper.catalog("gsp", 2)
        for L in standard_levis(a, proper_only=True):
            with self.subTest(subset=L.subset):
                self.assertEqual(vanishing_bound(L, 3, 2), 32)
                self.assertEqual(vanishing_bound(L, 2, 1), 2 * len(a.orbit))

    def test_bound_is_sharp(self):
        L = restrict_to_levi(helper.catalog("gsp", 2), [])
        c = vanishing_bound(L, 2, 1)
        self.assertEqual(vanishing_counterexamples(L, 2, 1, c + 1), [])
        survivors = vanishing_counterexamples(L, 2, 1, c)
        self.assertEqual(len(survivors), 1)
        self.assertTrue(all(n == 2 for n, _ in survivors[0].parts))

    def test_invalid_arguments(self):
        a = helper.catalog("gl", 3)
        L = restrict_to_levi(a, [0])
        with self.assertRaises(UsageError):
            vanishing_bound(L, 1, 1)
        with self.assertRaises(UsageError):
            vanishing_bound(L, 2, 0)
        with self.assertRaises(UsageError):
            vanishing_bound(restrict_to_levi(a, [0, 1]), 2, 1)


if __name__ == "__main__":
    unittest.main()
