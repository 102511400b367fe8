import unittest

import helper
from catalog import CATALOG, get_catalog_entry, list_catalog_entries, load_catalog_datum
from catalog.spin import spin_from_standard, spin_named, spin_to_standard
from catalog.symplectic import (
    symplectic_from_standard,
    symplectic_to_standard,
    symplectic_weight_from_standard,
    symplectic_weight_to_standard,
)
from errors import UsageError
from root_datum import pairing


class RegistryTest(unittest.TestCase):

    def test_entries(self):
        names = [entry["name"] for entry in list_catalog_entries()]
        self.assertEqual(names, ["gl", "gsp", "gspin", "spin", "e6", "e7"])
        self.assertEqual(set(names), set(CATALOG))
        with self.assertRaises(UsageError):
            get_catalog_entry("sl")

    def test_resolve_n(self):
        self.assertEqual(get_catalog_entry("gl").resolve_n(None), 3)
        self.assertEqual(get_catalog_entry("e7").resolve_n(None), 7)
        self.assertEqual(get_catalog_entry("spin").resolve_n(5), 5)
        for name, n in (("gl", 0), ("spin", 4), ("e7", 6), ("e6", 7)):
            with self.subTest(name=name, n=n):
                with self.assertRaises(UsageError):
                    get_catalog_entry(name).resolve_n(n)

    def test_named_coweights_have_their_degrees(self):
        for name, n in (("gl", 3), ("gsp", 3), ("gspin", 3)):
            a = load_catalog_datum(name, n)
            named = helper.named(name, n)
            self.assertEqual(a.degree(named["gamma"]), 1)
            for i in range(1, n):
                self.assertEqual(a.degree(named[f"gamma_{i}"]), i if name != "gsp" else 2)
            for alpha in a.datum.simple_roots:
                self.assertEqual(pairing(named["omega"], alpha), 0)

    def test_every_entry_certifies(self):
        expected_d_omega = {"gl": None, "gsp": 2, "gspin": 2}
        for name, n in (("gl", 2), ("gl", 3), ("gl", 4), ("gl", 5), ("gsp", 2), ("gsp", 3),
                        ("gspin", 2), ("gspin", 3), ("spin", 3), ("e6", None), ("e7", None)):
            with self.subTest(name=name, n=n):
                a = helper.catalog(name, n)
                self.assertEqual(a.degree(a.gamma), 1)
                if name in expected_d_omega:
                    self.assertEqual(a.d_omega, expected_d_omega[name] or n)

    def test_built_entries(self):
        self.assertEqual(len(load_catalog_datum("e6").orbit), 27)
        self.assertEqual(len(load_catalog_datum("spin", 3).orbit), 4)
        self.assertEqual(load_catalog_datum("e7").datum.rank, 8)


class CoordinatesTest(unittest.TestCase):

    def test_symplectic_coweights(self):
        self.assertEqual(symplectic_to_standard((1, 1, 1)), (1, 1, 0, 0))
        self.assertEqual(symplectic_from_standard((1, 1, 0, 0)), (1, 1, 1))
        self.assertEqual(symplectic_from_standard(symplectic_to_standard((2, 1, 2))), (2, 1, 2))
        with self.assertRaises(UsageError):
            symplectic_from_standard((1, 0, 0, 0))
        with self.assertRaises(UsageError):
            symplectic_from_standard((1, 0, 0))

    def test_symplectic_weights(self):
        for weight in ((1, 0, 0), (0, 1, 2), (-1, 3, -2)):
            self.assertEqual(symplectic_weight_from_standard(symplectic_weight_to_standard(weight)), weight)

    def test_spin_coordinates(self):
        self.assertEqual(spin_named(2)["gamma_1"], spin_named(2)["gamma"])
        self.assertEqual(spin_from_standard(spin_to_standard((1, 0, 0))), (1, 0, 0))


if __name__ == "__main__":
    unittest.main()
