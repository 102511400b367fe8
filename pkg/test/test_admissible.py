import unittest

import helper
from catalog.general_linear import general_linear_datum
from catalog.symplectic import symplectic_datum
from errors import ClaimViolation, NotDominantError
from admissible import (
    certify,
    check_one_admissible,
    is_minuscule,
    minuscule_fibre,
    special_weight_basis,
)
from root_datum import build_root_datum, pairing

GL3 = general_linear_datum(3)


class MinusculeTest(unittest.TestCase):

    def test_gl3(self):
        self.assertTrue(is_minuscule(GL3, (1, 0, 0)))
        self.assertTrue(is_minuscule(GL3, (1, 1, 0)))
        verdict = is_minuscule(GL3, (2, 0, 0))
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, (1, 1, 0))
        self.assertFalse(is_minuscule(GL3, (1, 0, -1)))
        self.assertFalse(is_minuscule(GL3, (0, 0, 0)))

    def test_not_dominant(self):
        with self.assertRaises(NotDominantError):
            is_minuscule(GL3, (0, 1, 0))
        with self.assertRaises(NotDominantError):
            check_one_admissible(GL3, (0, 0, 1))

    def test_spinor_coweight(self):
        self.assertTrue(is_minuscule(symplectic_datum(3), (1, 1, 1, 1)))
        self.assertFalse(is_minuscule(symplectic_datum(2), (2, 2, 2)))

    def test_fibre_in_degree_one(self):
        self.assertEqual(minuscule_fibre(GL3, (1, 0, 0)), [(1, 0, 0)])


class CertificateTest(unittest.TestCase):

    def test_gl3_passes(self):
        report = check_one_admissible(GL3, (1, 0, 0))
        self.assertTrue(report.overall)
        self.assertEqual(report.failed_conditions(), [])
        self.assertTrue(report.injective_on_minuscule)
        self.assertEqual([c.name for c in report.conditions], ["center", "pi1", "minuscule_generator", "faithful"])

    def test_second_fundamental_coweight_fails(self):
        report = check_one_admissible(GL3, (1, 1, 0))
        self.assertFalse(report.overall)
        self.assertIn("minuscule_generator", report.failed_conditions())
        self.assertIn("faithful", report.failed_conditions())
        self.assertEqual(report.condition("faithful").witness, 2)

    def test_non_minuscule_fails(self):
        report = check_one_admissible(symplectic_datum(2), (2, 2, 2))
        self.assertIn("minuscule_generator", report.failed_conditions())
        self.assertTrue(report.condition("center").passed)

    def test_semisimple_group_fails(self):
        sl2 = build_root_datum(1, [(2,)], [(1,)])
        report = check_one_admissible(sl2, (1,))
        self.assertIn("center", report.failed_conditions())
        self.assertIn("pi1", report.failed_conditions())

    def test_certify_raises(self):
        with self.assertRaises(ClaimViolation) as caught:
            certify(GL3, (1, 1, 0))
        self.assertEqual(caught.exception.claim, "one_admissible")


class SpecialWeightsTest(unittest.TestCase):

    def test_gl3(self):
        a = certify(GL3, (1, 0, 0))
        self.assertEqual(a.omega0, (1, 1, 1))
        self.assertEqual(a.omega, (1, 1, 1))
        self.assertEqual(a.d_omega, 3)
        self.assertEqual(a.J, (1,))
        self.assertEqual(a.degree((2, 1, 0)), 3)
        self.assertEqual(a.orbit, ((0, 0, 1), (0, 1, 0), (1, 0, 0)))

    def test_catalog_families(self):
        for name, n, d_omega in (("gl", 2, 2), ("gl", 4, 4), ("gsp", 2, 2), ("gsp", 3, 2),
                                 ("gspin", 2, 2), ("gspin", 3, 2)):
            with self.subTest(name=name, n=n):
                a = helper.catalog(name, n)
                self.assertEqual(a.d_omega, d_omega)
                self.assertEqual(a.omega, helper.named(name, n)["omega"])
                self.assertEqual(a.degree(a.gamma), 1)

    def test_basis_pairings(self):
        for name, n in (("gl", 3), ("gsp", 3), ("gspin", 3)):
            a = helper.catalog(name, n)
            d = a.datum
            omega0, omega_i = special_weight_basis(d, a.gamma)
            w0_gamma = a.w0.act(a.gamma)
            self.assertEqual(pairing(w0_gamma, omega0), 1)
            for coroot in d.simple_coroots:
                self.assertEqual(pairing(coroot, omega0), 0)
            for i, weight in enumerate(omega_i):
                self.assertEqual(pairing(w0_gamma, weight), 0)
                for j, coroot in enumerate(d.simple_coroots):
                    self.assertEqual(pairing(coroot, weight), int(i == j))


if __name__ == "__main__":
    unittest.main()
