#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Tests for weights, admissible configurations and the configuration count.
"""

import itertools
import unittest

from fschar.admissible import (
    Configuration,
    Weight,
    char_configs,
    count_admissible,
    enumerate_admissible,
    grade,
    is_admissible,
)
from fschar.exceptions import DimensionMismatch, UnsupportedWeight, WeightException
from fschar.series import GradeKey, make_constant

LEVEL_TWO = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 1, 1), (0, 0, 2), (1, 0, 1)]


def brute_force(weight, ell, dmax):
    """Every sequence of degree <= dmax, filtered by is_admissible()."""
    weight = Weight(weight)
    found = set()
    positions = ell * dmax

    for entries in itertools.product(range(weight.level + 1), repeat=positions):
        config = Configuration(entries)
        if config.degree(ell) <= dmax and is_admissible(config, weight, ell):
            found.add(config)

    return found


class BaseTestAdmissible(unittest.TestCase):
    """
    Common weights.
    """

    def setUp(self):
        self.lambda0 = Weight([1, 0, 0])
        self.two_lambda0 = Weight([2, 0, 0])
        self.unsupported = Weight([1, 0, 1])


class TestWeight(BaseTestAdmissible):
    """
    Weight construction and classification.
    """

    def test_create(self):
        """list, tuple, string and copy constructors"""
        self.assertEqual(Weight((2, 0, 0)), self.two_lambda0)
        self.assertEqual(Weight('2,0,0'), self.two_lambda0)
        self.assertEqual(Weight.parse(' 2, 0,0'), self.two_lambda0)
        self.assertEqual(Weight(self.two_lambda0), self.two_lambda0)
        self.assertEqual(Weight.fundamental(0), self.lambda0)
        self.assertEqual(Weight.fundamental(2, ell=3), Weight([0, 0, 1, 0]))

        self.assertEqual(self.two_lambda0.level, 2)
        self.assertEqual(self.two_lambda0.ell, 2)
        self.assertEqual(self.two_lambda0.label(), '2,0,0')
        self.assertEqual(self.two_lambda0.to_json(), [2, 0, 0])
        self.assertEqual(len(set([Weight('1,1,0'), Weight([1, 1, 0])])), 1)

    def test_bad_args(self):
        """malformed weights"""
        for bad in ('2,x,0', '', [], [1, -1, 0], [1.0, 0, 0], 7):
            with self.assertRaises(WeightException):
                Weight(bad)

        with self.assertRaises(WeightException):
            Weight.fundamental(3)

    def test_shape(self):
        """the two supported families"""
        self.assertEqual(Weight('3,1,0').shape(), 'k0k1')
        self.assertEqual(Weight('0,1,2').shape(), 'k1k2')
        self.assertEqual(Weight('0,0,0').shape(), 'k0k1')
        self.assertIsNone(self.unsupported.shape())
        self.assertIsNone(Weight('1,0,0,0').shape())

        self.assertTrue(Weight('0,2,0').formula_supported())
        self.assertFalse(self.unsupported.formula_supported())

        with self.assertRaises(UnsupportedWeight):
            self.unsupported.require_supported()

        with self.assertRaises(DimensionMismatch):
            Weight('1,0,0,0').require_supported()


class TestConfiguration(BaseTestAdmissible):
    """
    Configurations, grading and the admissibility check.
    """

    def test_trim(self):
        """trailing zeros are not significant"""
        self.assertEqual(Configuration([1, 0, 0]), Configuration([1]))
        self.assertEqual(len(Configuration([0, 0])), 0)
        self.assertEqual(list(Configuration.from_json(dict(entries=[0, 2])).entries()), [0, 2])

        with self.assertRaises(WeightException):
            Configuration([1, -1])

    def test_is_admissible(self):
        """initial and window inequalities"""
        self.assertTrue(is_admissible([1], self.lambda0, 2))
        self.assertFalse(is_admissible([1, 1], self.lambda0, 2))
        self.assertFalse(is_admissible([1, 1, 1], self.two_lambda0, 2))
        self.assertTrue(is_admissible([1, 0, 0, 1], self.lambda0, 2))
        self.assertTrue(is_admissible([], Weight('0,0,0'), 2))

        # Lambda_2 lets nothing through at positions 0 and 1
        self.assertFalse(is_admissible([0, 1], Weight('0,0,1'), 2))
        self.assertTrue(is_admissible([0, 0, 1], Weight('0,0,1'), 2))

    def test_dimension(self):
        """weight size must be ell + 1"""
        with self.assertRaises(DimensionMismatch):
            is_admissible([1], Weight([1, 0]), 2)

        with self.assertRaises(DimensionMismatch):
            enumerate_admissible(self.lambda0, 3, 2)

        with self.assertRaises(DimensionMismatch):
            char_configs(Weight([1, 0]), 4)

    def test_grade(self):
        """position i has color i mod ell + 1 and degree i // ell + 1"""
        self.assertEqual(grade([1]), ((1, 0), 1))
        self.assertEqual(grade([0, 0, 1]), ((1, 0), 2))
        self.assertEqual(grade(Configuration([1, 2, 0, 1])), ((1, 3), 5))
        self.assertEqual(Configuration([1, 2, 0, 1]).degree(), 5)
        self.assertEqual(grade([1, 1, 1], ell=3), ((1, 1, 1), 3))


class TestEnumeration(BaseTestAdmissible):
    """
    enumerate_admissible and count_admissible against brute force.
    """

    def test_examples(self):
        """small listings"""
        self.assertEqual(list(enumerate_admissible(Weight('0,0,0'), 2, 10)), [Configuration()])

        self.assertEqual(list(enumerate_admissible(self.lambda0, 2, 1)),
                         [Configuration(), Configuration([0, 1]), Configuration([1])])

        found = list(enumerate_admissible(self.two_lambda0, 2, 2))
        self.assertEqual(len(found), 8)
        self.assertEqual(set(found), set(Configuration(i) for i in (
            [], [1], [0, 1], [2], [1, 1], [0, 2], [0, 0, 1], [0, 0, 0, 1])))

    def test_order(self):
        """by degree, then lexicographic"""
        found = list(enumerate_admissible(Weight('1,1,0'), 2, 5))
        keys = [(c.degree(), list(c.entries())) for c in found]
        self.assertEqual(keys, sorted(keys))
        self.assertEqual(len(set(found)), len(found))

    def test_brute_force(self):
        """the enumerator lists exactly the admissible sequences"""
        for comps in LEVEL_TWO:
            self.assertEqual(set(enumerate_admissible(comps, 2, 4)), brute_force(comps, 2, 4))

        for comps in [(3, 0, 0), (1, 1, 1), (0, 2, 1)]:
            self.assertEqual(set(enumerate_admissible(comps, 2, 3)), brute_force(comps, 2, 3))

    def test_level_one(self):
        """entries are 0 or 1 and nonzero positions sit at least three apart"""
        # positions the initial conditions close
        closed = {(1, 0, 0): [], (0, 1, 0): [0], (0, 0, 1): [0, 1]}

        for comps, shut in closed.items():
            found = list(enumerate_admissible(comps, 2, 8))
            self.assertTrue(len(found) > 1, comps)

            for config in found:
                entries = list(config.entries())
                self.assertTrue(all(i <= 1 for i in entries), (comps, entries))

                nonzero = [i for i, val in enumerate(entries) if val]
                for left, right in zip(nonzero, nonzero[1:]):
                    self.assertGreaterEqual(right - left, 3, (comps, entries))

                self.assertFalse(set(nonzero) & set(shut), (comps, entries))

    def test_monotone_in_weight(self):
        """adding a fundamental weight only lets more configurations through"""
        pairs = [((1, 0, 0), (2, 0, 0)), ((0, 0, 1), (0, 1, 1)), ((1, 1, 0), (2, 1, 0)),
                 ((0, 1, 1), (0, 2, 1))]

        for small, big in pairs:
            fewer = set(enumerate_admissible(small, 2, 5))
            more = set(enumerate_admissible(big, 2, 5))

            self.assertTrue(fewer <= more, (small, big))
            self.assertTrue(len(fewer) < len(more), (small, big))
            for config in fewer:
                self.assertTrue(is_admissible(config, big, 2), (small, big, config))

    def test_counts(self):
        """count_admissible agrees with the enumerator for ell 1, 2 and 3"""
        cases = [((1, 1), 1, 8), ((2, 0), 1, 6), ((2, 0, 0), 2, 6), ((1, 0, 1), 2, 6),
                 ((1, 0, 0, 1), 3, 5), ((0, 1, 1, 0), 3, 5)]

        for comps, ell, dmax in cases:
            expected = dict()
            for config in enumerate_admissible(comps, ell, dmax):
                key = grade(config, ell)
                expected[key] = expected.get(key, 0) + 1

            self.assertEqual(dict(count_admissible(comps, ell, dmax)), expected)

    def test_parallel_counts(self):
        """splitting by a_0 does not change the count"""
        serial = count_admissible((2, 1, 0), 2, 8)
        self.assertEqual(count_admissible((2, 1, 0), 2, 8, jobs=2), serial)


class TestCharConfigs(BaseTestAdmissible):
    """
    The configuration character.
    """

    def test_examples(self):
        """spot values"""
        self.assertEqual(char_configs('0,0,0', 10), make_constant(1, 10))

        series = char_configs(self.lambda0, 1)
        self.assertEqual(series.terms(), {GradeKey(0, 0, 0): 1, GradeKey(1, 0, 1): 1,
                                          GradeKey(0, 1, 1): 1})

        series = char_configs(self.two_lambda0, 4)
        self.assertEqual(series.coefficients_at(1), {(1, 0): 1, (0, 1): 1})
        self.assertEqual(series.coefficients_at(2),
                         {(2, 0): 1, (1, 1): 1, (0, 2): 1, (1, 0): 1, (0, 1): 1})

    def test_against_enumeration(self):
        """every coefficient counts configurations"""
        for comps in LEVEL_TWO:
            series = char_configs(comps, 6)
            self.assertEqual(sum(series.degree_counts()),
                             len(list(enumerate_admissible(comps, 2, 6))))
            for config in enumerate_admissible(comps, 2, 3):
                (n1, n2), d = grade(config)
                self.assertGreater(series.coeff((n1, n2, d)), 0)

    def test_properties(self):
        """nonnegative, charge bounded and monotone in the weight"""
        for comps in LEVEL_TWO:
            series = char_configs(comps, 10)
            self.assertTrue(series.is_nonnegative())
            self.assertTrue(series.is_charge_bounded())

        # adding Lambda_0 only relaxes the inequalities
        smaller = char_configs('1,1,0', 10).degree_counts()
        larger = char_configs('2,1,0', 10).degree_counts()
        for low, high in zip(smaller, larger):
            self.assertLessEqual(low, high)


if __name__ == '__main__':
    unittest.main()
