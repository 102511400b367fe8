import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

import helper
from config import LimitsConfig, Settings, set_settings
from errors import CapExceededError, NotDominantError
from rep import (
    CharacterMultiset,
    IntegerPartition,
    cartan_component_multiplicity,
    character,
    decompose,
    exterior_power,
    fibre_multiplicities,
    gl_dimension,
    hom_multiplicity,
    klimyk_decompose,
    levi_dimension,
    partitions,
    schur_decompose,
    symmetric_power,
    tensor_decompose,
    wedge_sym_decompose,
    weyl_dimension,
)
from root_datum import add, scale


def combine(*terms):
    """Sum of integer multiples of coweights."""
    total = None
    for k, v in terms:
        total = scale(k, v) if total is None else add(total, scale(k, v))
    return total


class PartitionTest(unittest.TestCase):

    def test_partitions(self):
        self.assertEqual(len(partitions(4)), 5)
        self.assertEqual([p.parts for p in partitions(4, max_length=2)], [(4,), (3, 1), (2, 2)])
        self.assertEqual(IntegerPartition((3, 1)).conjugate().parts, (2, 1, 1))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            IntegerPartition((1, 2))
        with self.assertRaises(ValueError):
            IntegerPartition((2, 0))

    def test_gl_dimension(self):
        self.assertEqual(gl_dimension(IntegerPartition((2, 1)), 3), 8)
        self.assertEqual(gl_dimension(IntegerPartition((2,)), 4), 10)
        self.assertEqual(gl_dimension(IntegerPartition((1, 1, 1, 1)), 3), 0)


class CharacterTest(unittest.TestCase):

    def setUp(self):
        self.gl3 = helper.catalog("gl", 3).datum

    def tearDown(self):
        helper.reset_settings()

    def test_dimensions(self):
        d = self.gl3
        self.assertEqual(weyl_dimension(d, (1, 0, 0)), 3)
        self.assertEqual(weyl_dimension(d, (2, 0, 0)), 6)
        self.assertEqual(weyl_dimension(d, (2, 1, 0)), 8)
        self.assertEqual(weyl_dimension(d, (1, 0, -1)), 8)
        self.assertEqual(levi_dimension(d, [0], (1, 0, 0)), 2)
        with self.assertRaises(NotDominantError):
            weyl_dimension(d, (0, 1, 0))

    def test_adjoint_character(self):
        chi = character(self.gl3, (1, 0, -1))
        self.assertEqual(chi.dimension, 8)
        self.assertEqual(chi.multiplicity((0, 0, 0)), 2)
        self.assertTrue(chi.is_weyl_invariant(self.gl3))

    def test_symplectic_dimensions(self):
        for n in (2, 3):
            named = helper.named("gsp", n)
            d = helper.catalog("gsp", n).datum
            self.assertEqual(weyl_dimension(d, named["gamma"]), 2 ** n)
            self.assertEqual(weyl_dimension(d, named["gamma_1"]), 2 * n + 1)

    def test_dimension_cap(self):
        set_settings(Settings(limits=LimitsConfig(dimension_cap=5)))
        with self.assertRaises(CapExceededError):
            character(self.gl3, (2, 0, 0))


class DecompositionTest(unittest.TestCase):

    def setUp(self):
        self.gl3 = helper.catalog("gl", 3).datum

    def test_gl3_tensor_square(self):
        result = tensor_decompose(self.gl3, (1, 0, 0), (1, 0, 0))
        self.assertEqual(result.as_dict(), {(2, 0, 0): 1, (1, 1, 0): 1})
        self.assertEqual(result.highest_weights, [(2, 0, 0), (1, 1, 0)])
        self.assertEqual(result.dimension(self.gl3), 9)

    def test_oracle_order_agrees(self):
        d = helper.catalog("gsp", 2).datum
        gamma = helper.named("gsp", 2)["gamma"]
        first = tensor_decompose(d, gamma, gamma)
        second = tensor_decompose(d, gamma, gamma, reverse_lex=False)
        self.assertEqual(first.as_dict(), second.as_dict())

    def test_powers_of_standard(self):
        d = self.gl3
        self.assertEqual(wedge_sym_decompose(d, (1, 0, 0), 2).as_dict(), {(1, 1, 0): 1})
        self.assertEqual(wedge_sym_decompose(d, (1, 0, 0), 3).as_dict(), {(1, 1, 1): 1})
        self.assertEqual(wedge_sym_decompose(d, (1, 0, 0), 2, "symmetric").as_dict(), {(2, 0, 0): 1})
        with self.assertRaises(ValueError):
            wedge_sym_decompose(d, (1, 0, 0), 0)
        with self.assertRaises(ValueError):
            wedge_sym_decompose(d, (1, 0, 0), 2, "divided")

    def test_sym_plus_wedge_is_tensor(self):
        d = helper.catalog("gspin", 2).datum
        gamma = helper.named("gspin", 2)["gamma"]
        chi = character(d, gamma)
        both = symmetric_power(chi, 2, d.rank) + exterior_power(chi, 2, d.rank)
        self.assertEqual(decompose(d, both).as_dict(), tensor_decompose(d, gamma, gamma).as_dict())

    def test_schur_functor(self):
        chi = character(self.gl3, (1, 0, 0))
        result = schur_decompose(self.gl3, chi, IntegerPartition((2, 1)))
        self.assertEqual(result.as_dict(), {(2, 1, 0): 1})
        self.assertEqual(hom_multiplicity(self.gl3, (2, 1, 0), result), 1)

    def test_virtual_characters(self):
        chi = character(self.gl3, (1, 0, 0))
        difference = chi * chi - symmetric_power(chi, 2, 3)
        self.assertEqual(decompose(self.gl3, difference).as_dict(), {(1, 1, 0): 1})
        self.assertEqual(CharacterMultiset.trivial(3).dimension, 1)


coefficients = st.lists(st.integers(0, 1), min_size=4, max_size=4)


class RandomPairsTest(unittest.TestCase):
    """Dominant pairs built from the named coweights of each datum of rank at most three."""

    @classmethod
    def setUpClass(cls):
        cls.data = {}
        for name, n in (("gl", 2), ("gl", 3), ("gsp", 2), ("gspin", 2)):
            named = helper.named(name, n)
            generators = [v for k, v in sorted(named.items()) if k != "omega"]
            cls.data[f"{name}{n}"] = (helper.catalog(name, n).datum, generators, named["omega"])

    def check_pair(self, label, first, second, central):
        d, generators, omega = self.data[label]
        x = combine((central, omega), *zip(first, generators))
        y = combine(*zip(second, generators))
        peeled = tensor_decompose(d, x, y)
        self.assertEqual(peeled.as_dict(), klimyk_decompose(d, x, y).as_dict())
        self.assertEqual(peeled.as_dict(), tensor_decompose(d, x, y, reverse_lex=False).as_dict())
        self.assertEqual(peeled.dimension(d), weyl_dimension(d, x) * weyl_dimension(d, y))

    @given(coefficients, coefficients, st.integers(-1, 1))
    @settings(max_examples=100, deadline=None)
    def test_gl2(self, first, second, central):
        self.check_pair("gl2", first, second, central)

    @given(coefficients, coefficients, st.integers(-1, 1))
    @settings(max_examples=100, deadline=None)
    def test_gl3(self, first, second, central):
        self.check_pair("gl3", first, second, central)

    @given(coefficients, coefficients, st.integers(-1, 1))
    @settings(max_examples=100, deadline=None)
    def test_gsp4(self, first, second, central):
        self.check_pair("gsp2", first, second, central)

    @given(coefficients, coefficients, st.integers(-1, 1))
    @settings(max_examples=100, deadline=None)
    def test_gspin5(self, first, second, central):
        self.check_pair("gspin2", first, second, central)

    def test_reflection_cancels_on_walls(self):
        d = self.data["gl3"][0]
        self.assertEqual(klimyk_decompose(d, (1, 0, 0), (1, 0, 0)).as_dict(), {(2, 0, 0): 1, (1, 1, 0): 1})
        self.assertEqual(klimyk_decompose(d, (1, 0, -1), (1, 0, -1)).multiplicity((0, 0, 0)), 1)
        with self.assertRaises(NotDominantError):
            klimyk_decompose(d, (0, 1, 0), (1, 0, 0))


class SpecialFamiliesTest(unittest.TestCase):

    def test_spinor_square(self):
        for n in (2, 3):
            with self.subTest(n=n):
                named = helper.named("gsp", n)
                d = helper.catalog("gsp", n).datum
                expected = {combine((2, named["gamma"])): 1, named["omega"]: 1}
                for i in range(1, n):
                    expected[named[f"gamma_{i}"]] = 1
                self.assertEqual(tensor_decompose(d, named["gamma"], named["gamma"]).as_dict(), expected)

    def test_exterior_powers_of_standard(self):
        n = 3
        named = helper.named("gsp", n)
        d = helper.catalog("gsp", n).datum
        for i in range(1, n):
            expected = combine((1, named[f"gamma_{i}"]), (i - 1, named["omega"]))
            self.assertEqual(wedge_sym_decompose(d, named["gamma_1"], i).as_dict(), {expected: 1})
        top = combine((2, named["gamma"]), (n - 1, named["omega"]))
        self.assertEqual(wedge_sym_decompose(d, named["gamma_1"], n).as_dict(), {top: 1})

    def test_spin_wedge_square(self):
        for n in (2, 3):
            with self.subTest(n=n):
                named = helper.named("gspin", n)
                d = helper.catalog("gspin", n).datum
                expected = {named["gamma_2"]: 1, named["omega"]: 1}
                self.assertEqual(wedge_sym_decompose(d, named["gamma"], 2).as_dict(), expected)


class MultiplicityFormulaTest(unittest.TestCase):

    def test_cartan_component(self):
        d = helper.catalog("gl", 3).datum
        self.assertEqual(cartan_component_multiplicity(d, (1, 1), [(1, 0, 0), (1, 1, 0)]), 1)
        self.assertEqual(cartan_component_multiplicity(d, (2, 0), [(1, 0, 0), (1, 1, 0)]), 1)

    def test_fibre_rank(self):
        a = helper.catalog("gl", 2)
        fibre = fibre_multiplicities(a, [(1, (0, 0))])
        self.assertEqual(fibre.total, 2)
        self.assertEqual(fibre.parts[0][2], (1, 0))


if __name__ == "__main__":
    unittest.main()
