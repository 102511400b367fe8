import unittest

import helper
from errors import NotDominantError, UsageError
from levi import MuDecomposition, general_position_decompositions, restrict_to_levi, theta_level
from root_datum import pairing, sub, two_rho_check
from strata import (
    AffineDim,
    constant_term_shift,
    convolution_dim,
    decompositions_of_image,
    fibration_fiber_dim,
    general_position_count,
    hecke_relative_dim,
    hecke_transition,
    m_flag_dim,
    max_orbit_stratum_dim,
    mu_decompositions,
    orbit_stratum_dim,
    tau_partitions,
    whittaker_shift,
    whittaker_support,
    y_dimension,
)


class AffineDimTest(unittest.TestCase):

    def test_arithmetic(self):
        x = AffineDim(2, d_N=1)
        y = AffineDim(5, d_N=1)
        self.assertTrue(x < y)
        self.assertTrue(x <= x)
        self.assertEqual(y - x, AffineDim(3))
        self.assertEqual((x + AffineDim(0, d_G=1)).symbols, (1, 1, 0))
        self.assertEqual(str(x), "2 + d_N")
        self.assertEqual(x.to_dict(), {"const": 2, "d_N": 1, "d_G": 0, "d_M": 0})

    def test_incomparable(self):
        with self.assertRaises(ValueError):
            AffineDim(0, d_N=1) < AffineDim(0, d_G=1)


class FormalDimensionTest(unittest.TestCase):

    def setUp(self):
        self.gl2 = helper.catalog("gl", 2)
        self.gl3 = helper.catalog("gl", 3)

    def test_y_dimension(self):
        self.assertEqual(y_dimension(self.gl2, 1, (0, 0), 1), AffineDim(2, d_N=1))
        self.assertEqual(y_dimension(self.gl2, 2, (1, -1), 1), AffineDim(1, d_N=1))

    def test_shifts(self):
        self.assertEqual(whittaker_shift(self.gl2, (1, 0)), AffineDim(1, d_N=1, d_G=-1))
        self.assertEqual(hecke_relative_dim(self.gl3), 2)
        self.assertEqual(hecke_relative_dim(helper.catalog("gsp", 2)), 3)

    def test_constant_term_shift(self):
        L = restrict_to_levi(self.gl3, [0])
        self.assertEqual(constant_term_shift(L, (1, 0, -1)), AffineDim(-3, d_G=1, d_M=-1))
        self.assertEqual(constant_term_shift(L, (1, 0, -1), sign=-1), AffineDim(3, d_G=1, d_M=-1))


class TauPartitionTest(unittest.TestCase):

    def setUp(self):
        self.gl2 = helper.catalog("gl", 2)

    def test_degree_one(self):
        taus = tau_partitions(self.gl2, 1, (0, 0))
        self.assertEqual(len(taus), 1)
        self.assertEqual(taus[0].parts, ((1, (0, 0)),))
        self.assertEqual(taus[0].length, 1)

    def test_degree_two(self):
        taus = tau_partitions(self.gl2, 2, (0, 0))
        self.assertEqual(sorted(t.length for t in taus), [1, 2])
        longest = max(taus, key=lambda t: t.length)
        self.assertEqual(longest.coweights, ((1, 0), (1, 0)))
        self.assertTrue(all(t.dimension <= longest.dimension for t in taus))

    def test_shifted_target(self):
        taus = tau_partitions(self.gl2, 2, (1, -1))
        self.assertEqual(len(taus), 1)
        self.assertEqual(taus[0].parts, ((2, (1, -1)),))

    def test_strict_unless_top(self):
        a = helper.catalog("gl", 3)
        top = y_dimension(a, 3, (0, 0, 0), 3)
        for mu in ((0, 0, 0), (0, 1, -1), (1, 1, -2)):
            for tau in tau_partitions(a, 3, mu):
                if mu == (0, 0, 0) and tau.length == 3:
                    self.assertEqual(tau.dimension, top)
                else:
                    self.assertTrue(tau.dimension < top)

    def test_invalid(self):
        with self.assertRaises(UsageError):
            tau_partitions(self.gl2, 2, (-1, 1))
        with self.assertRaises(NotDominantError):
            tau_partitions(self.gl2, 1, (1, -1))


class MuDecompositionTest(unittest.TestCase):

    def setUp(self):
        self.L = restrict_to_levi(helper.catalog("gl", 3), [0])

    def test_decompositions_sum_to_mu(self):
        decompositions = mu_decompositions(self.L, (1, 0, 1))
        self.assertTrue(decompositions)
        mu = self.L.project((1, 0, 1))
        for m in decompositions:
            total = tuple(0 for _ in mu)
            for n, image in m.parts:
                total = tuple(t + n * c for t, c in zip(total, image))
            self.assertEqual(total, mu)
        self.assertGreaterEqual(general_position_count(decompositions), 1)
        self.assertLess(general_position_count(decompositions), len(decompositions))

    def test_not_in_semigroup(self):
        with self.assertRaises(UsageError):
            mu_decompositions(self.L, (0, 1, 1))

    def test_image_entry_point(self):
        mu = self.L.project((1, 0, 1))
        self.assertEqual(decompositions_of_image(self.L, mu, 2), mu_decompositions(self.L, (1, 0, 1)))
        for m in decompositions_of_image(self.L, mu, 2):
            self.assertEqual(m.mu, mu)
        with self.assertRaises(UsageError):
            decompositions_of_image(self.L, mu, 3)
        with self.assertRaises(UsageError):
            decompositions_of_image(self.L, mu + (0,), 2)


class StratumDimensionTest(unittest.TestCase):

    def setUp(self):
        self.a = helper.catalog("gl", 3)
        self.L = restrict_to_levi(self.a, [0])

    def test_orbit_strata(self):
        self.assertEqual(orbit_stratum_dim(self.a, (1, 0, 0)), 2)
        self.assertEqual(orbit_stratum_dim(self.a, (0, 0, 1)), 0)
        self.assertEqual(orbit_stratum_dim(self.a, self.a.w0), 0)
        with self.assertRaises(UsageError):
            orbit_stratum_dim(self.a, (1, 1, 0))

    def test_telescoping(self):
        rho2 = two_rho_check(self.a.datum)
        for x in self.a.orbit:
            lower = pairing(sub(self.a.gamma, x), rho2) // 2
            self.assertEqual(orbit_stratum_dim(self.a, x) + lower, pairing(self.a.gamma, rho2))

    def test_maximum_over_levi(self):
        self.assertEqual(max_orbit_stratum_dim(self.L, (0, 1, 0)), 2)

    def test_fibration(self):
        self.assertEqual(fibration_fiber_dim(self.L, (1, 0, 0)), 1)
        self.assertEqual(fibration_fiber_dim(self.L, (0, 0, 1)), 0)
        with self.assertRaises(NotDominantError):
            fibration_fiber_dim(self.L, (0, 1, 0))

    def test_fibres_nonnegative_on_gsp4(self):
        a = helper.catalog("gsp", 2)
        for subset in ((), (0,), (1,)):
            L = restrict_to_levi(a, subset)
            for x in a.orbit:
                if L.is_M_dominant(x):
                    self.assertGreaterEqual(fibration_fiber_dim(L, x), 0)

    def test_m_flags(self):
        self.assertEqual(m_flag_dim(self.L, (1, 0, 0)), 1)
        self.assertEqual(m_flag_dim(self.L, (1, 1, 0)), 0)

    def test_convolution(self):
        theta = theta_level(self.L)
        values = sorted(convolution_dim(self.L, m, theta) for m in general_position_decompositions(self.L, 1, theta))
        self.assertEqual(values, [0, 1])
        image = theta.images[0]
        lumped = MuDecomposition(tuple(2 * c for c in image), ((1, image),), 2)
        with self.assertRaises(UsageError):
            convolution_dim(self.L, lumped, theta)


class SupportAndTransitionTest(unittest.TestCase):

    def setUp(self):
        self.gl2 = helper.catalog("gl", 2)

    def test_whittaker_support(self):
        self.assertTrue(whittaker_support(self.gl2, [(1, (0, 0))]))
        self.assertFalse(whittaker_support(self.gl2, [(1, (1, -1))]))
        with self.assertRaises(UsageError):
            whittaker_support(self.gl2, [(1, (-1, 1))])

    def test_hecke_transition(self):
        step = hecke_transition(self.gl2, (0, 0), (1, 0), 1, (0, 0))
        self.assertTrue(step.contributes)
        self.assertEqual(step.mu_prime, (0, 0))
        self.assertEqual(step.local_value, (2, 0))
        other = hecke_transition(self.gl2, (0, 0), (0, 1), 1, (0, 0))
        self.assertEqual(other.mu_prime, (1, -1))
        self.assertTrue(other.contributes)
        with self.assertRaises(UsageError):
            hecke_transition(self.gl2, (0, 0), (1, 0), -1, (0, 0))


if __name__ == "__main__":
    unittest.main()
