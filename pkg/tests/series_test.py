#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Tests for the TriGradedSeries class and the q-series builders.
"""

import random
import unittest

from fschar.exceptions import QueryBeyondCutoff, SeriesException
from fschar.series import (
    GradeKey,
    TriGradedSeries,
    inv_pochhammer,
    make_constant,
    make_monomial,
    pochhammer,
    q_series,
    series_sum,
)

# p(0) .. p(12)
PARTITIONS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


class BaseTestSeries(unittest.TestCase):
    """
    Common setup and a random small series generator.
    """

    def setUp(self):
        self.rng = random.Random(20161016)
        self.one = make_constant(1, 5)
        self.one_plus_q = TriGradedSeries({(0, 0, 0): 1, (0, 0, 1): 1}, 5)

    def _random_series(self, cutoff=6):
        terms = dict()
        for _ in range(self.rng.randint(0, 8)):
            key = (self.rng.randint(0, 3), self.rng.randint(0, 3), self.rng.randint(0, cutoff))
            terms[key] = self.rng.randint(-9, 9)
        return TriGradedSeries(terms, cutoff)


class TestSeriesCreation(BaseTestSeries):
    """
    Construction, normalization and accessors.
    """

    def test_constants(self):
        """make_constant examples."""
        self.assertEqual(make_constant(1, 10).terms(), {GradeKey(0, 0, 0): 1})
        self.assertTrue(make_constant(0, 10).is_zero())

        five = make_constant(5, 0)
        self.assertEqual(five.cutoff, 0)
        self.assertEqual(five.coeff((0, 0, 0)), 5)

    def test_normalization(self):
        """zeros and terms above the cutoff are dropped."""
        series = TriGradedSeries({(0, 0, 0): 0, (1, 0, 1): 2, (0, 0, 4): 7}, 3)
        self.assertEqual(series.size(), 1)
        self.assertEqual(series.coeff((1, 0, 1)), 2)

        # repeated keys accumulate
        series = TriGradedSeries([((1, 1, 2), 1), ((1, 1, 2), 2)], 3)
        self.assertEqual(series.coeff(GradeKey(1, 1, 2)), 3)

    def test_bad_args(self):
        """invalid keys, coefficients and cutoffs."""
        with self.assertRaises(SeriesException):
            GradeKey(-1, 0, 0)

        with self.assertRaises(SeriesException):
            GradeKey(0, 0, 1.5)

        with self.assertRaises(SeriesException):
            TriGradedSeries({(0, 0, 0): 1}, -1)

        with self.assertRaises(SeriesException):
            TriGradedSeries({(0, 0, 0): 0.5}, 3)

        with self.assertRaises(SeriesException):
            TriGradedSeries({(0, 0, 0): 1}, True)

    def test_coeff(self):
        """coefficient lookup and the cutoff contract."""
        series = make_constant(1, 5)
        self.assertEqual(series.coeff((0, 0, 0)), 1)
        self.assertEqual(series.coeff((1, 0, 1)), 0)

        with self.assertRaises(QueryBeyondCutoff):
            series.coeff((0, 0, 6))

        # it is also a SeriesException
        with self.assertRaises(SeriesException):
            series.coefficients_at(6)

    def test_coefficients_at(self):
        """q^d coefficient as a z polynomial"""
        series = TriGradedSeries({(0, 0, 0): 1, (1, 0, 2): 3, (0, 2, 2): -1}, 4)
        self.assertEqual(series.coefficients_at(2), {(1, 0): 3, (0, 2): -1})
        self.assertEqual(series.coefficients_at(3), {})
        self.assertEqual(series.degree_counts(), [1, 0, 2, 0, 0])

    def test_q_series(self):
        """counts list to series"""
        series = q_series([1, 0, 2, 5], 2, (1, 2))
        self.assertEqual(series.sorted_terms(),
                         [(GradeKey(1, 2, 0), 1), (GradeKey(1, 2, 2), 2)])

    def test_predicates(self):
        """nonnegative and charge bounded checks"""
        self.assertTrue(TriGradedSeries({(1, 0, 1): 2, (1, 1, 3): 1}, 3).is_nonnegative())
        self.assertFalse(TriGradedSeries({(1, 0, 1): -2}, 3).is_nonnegative())

        self.assertTrue(TriGradedSeries({(1, 1, 2): 1}, 3).is_charge_bounded())
        self.assertFalse(TriGradedSeries({(2, 1, 2): 1}, 3).is_charge_bounded())


class TestSeriesArithmetic(BaseTestSeries):
    """
    add/mul/mul_monomial and the ring laws.
    """

    def test_add_examples(self):
        """cancellation and same key"""
        left = TriGradedSeries({(0, 0, 0): 1}, 5)
        right = TriGradedSeries({(0, 0, 0): -1}, 5)
        self.assertTrue(left.add(right).is_zero())

        left = TriGradedSeries({(1, 0, 1): 2}, 5)
        right = TriGradedSeries({(1, 0, 1): 3}, 5)
        self.assertEqual((left + right).terms(), {GradeKey(1, 0, 1): 5})

    def test_mul_examples(self):
        """binomial square and key addition"""
        square = self.one_plus_q * self.one_plus_q
        self.assertEqual(square, TriGradedSeries({(0, 0, 0): 1, (0, 0, 1): 2, (0, 0, 2): 1}, 5))

        z1q = make_monomial((1, 0, 1), 5)
        z2q = make_monomial((0, 1, 1), 5)
        self.assertEqual((z1q * z2q).terms(), {GradeKey(1, 1, 2): 1})

    def test_cutoff_propagation(self):
        """results carry the smaller cutoff"""
        big = TriGradedSeries({(0, 0, 0): 1, (0, 0, 4): 1}, 8)
        small = TriGradedSeries({(0, 0, 1): 1}, 3)

        self.assertEqual((big + small).cutoff, 3)
        self.assertEqual((big * small).cutoff, 3)
        self.assertEqual((big + small).coefficients_at(1), {(0, 0): 1})
        # the q^4 term is beyond the common cutoff
        self.assertEqual(big.add(small).size(), 2)

    def test_mul_monomial(self):
        """shift examples"""
        shifted = self.one.mul_monomial((0, 0, 1))
        self.assertEqual(shifted.terms(), {GradeKey(0, 0, 1): 1})

        shifted = self.one.mul_monomial(GradeKey(1, 1, 2))
        self.assertEqual(shifted.terms(), {GradeKey(1, 1, 2): 1})

        # shifting past the cutoff empties the series
        self.assertTrue(self.one_plus_q.mul_monomial((0, 0, 6)).is_zero())

        self.assertEqual(self.one.mul_monomial((0, 0, 0), c=-3).coeff((0, 0, 0)), -3)
        self.assertTrue(self.one.mul_monomial((0, 0, 0), c=0).is_zero())

    def test_truncate(self):
        """truncate only lowers the cutoff"""
        series = TriGradedSeries({(0, 0, 0): 1, (0, 0, 3): 2}, 5)
        self.assertEqual(series.truncate(2), make_constant(1, 2))
        self.assertEqual(series.truncate(9).cutoff, 5)

    def test_ring_laws(self):
        """commutativity, associativity, distributivity on random series."""
        for _ in range(1000):
            a = self._random_series()
            b = self._random_series()
            c = self._random_series()

            self.assertEqual(a + b, b + a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a * b, b * a)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertTrue((a - a).is_zero())
            self.assertEqual(a * make_constant(1, 6), a)
            self.assertTrue((a * make_constant(0, 6)).is_zero())

    def test_series_sum(self):
        """series_sum matches chained add()"""
        items = [self._random_series() for _ in range(20)]

        chained = make_constant(0, 6)
        for i in items:
            chained = chained + i

        self.assertEqual(series_sum(items, 6), chained)
        self.assertEqual(series_sum(items, 4), chained.truncate(4))

        with self.assertRaises(QueryBeyondCutoff):
            series_sum([make_constant(1, 2)], 3)


class TestPochhammer(BaseTestSeries):
    """
    (q)_M and its inverse.
    """

    def test_examples(self):
        """small cases"""
        self.assertEqual(inv_pochhammer(0, 7), make_constant(1, 7))
        self.assertEqual(inv_pochhammer(1, 4).degree_counts(), [1, 1, 1, 1, 1])
        self.assertEqual(inv_pochhammer(2, 5).degree_counts(), [1, 1, 2, 2, 3, 3])

        self.assertEqual(pochhammer(0, 7), make_constant(1, 7))
        self.assertEqual(pochhammer(2, 5).degree_counts(), [1, -1, -1, 1, 0, 0])

    def test_inverse(self):
        """(q)_M / (q)_M = 1"""
        for M in range(13):
            product = inv_pochhammer(M, 30) * pochhammer(M, 30)
            self.assertEqual(product, make_constant(1, 30))

    def test_partitions(self):
        """1/(q)_M counts partitions into parts <= M"""
        self.assertEqual(inv_pochhammer(12, 12).degree_counts(), PARTITIONS)
        # parts above the cutoff change nothing
        self.assertEqual(inv_pochhammer(40, 12), inv_pochhammer(12, 12))

        for M in range(1, 12):
            lower = inv_pochhammer(M, 20).degree_counts()
            upper = inv_pochhammer(M + 1, 20).degree_counts()
            for low, high in zip(lower, upper):
                self.assertLessEqual(low, high)

    def test_bad_args(self):
        """negative orders"""
        with self.assertRaises(SeriesException):
            inv_pochhammer(-1, 5)


class TestSeriesComparison(BaseTestSeries):
    """
    equal_up_to and first_difference.
    """

    def test_equal_up_to(self):
        """reflexive and truncated agreement"""
        for _ in range(50):
            series = self._random_series()
            self.assertTrue(series.equal_up_to(series, 6))

        self.assertTrue(self.one.equal_up_to(self.one_plus_q, 0))
        self.assertFalse(self.one.equal_up_to(self.one_plus_q, 1))

        with self.assertRaises(QueryBeyondCutoff):
            self.one.equal_up_to(self.one_plus_q, 6)

    def test_first_difference(self):
        """smallest differing key in (d, n1, n2) order"""
        left = TriGradedSeries({(0, 0, 0): 1, (2, 0, 2): 1, (0, 1, 2): 1}, 4)
        right = TriGradedSeries({(0, 0, 0): 1, (2, 0, 2): 2, (1, 1, 3): 1}, 4)

        self.assertEqual(left.first_difference(right, 4), GradeKey(0, 1, 2))
        self.assertEqual(left.first_difference(right, 1), None)


class TestSeriesJson(BaseTestSeries):
    """
    Wire format.
    """

    def test_wire_format(self):
        """sorted terms with string coefficients"""
        series = TriGradedSeries({(0, 1, 1): 1, (0, 0, 0): 1, (1, 0, 1): 10 ** 30}, 3)

        self.assertEqual(series.to_json(), dict(
            cutoff=3,
            terms=[
                dict(n1=0, n2=0, d=0, c='1'),
                dict(n1=0, n2=1, d=1, c='1'),
                dict(n1=1, n2=0, d=1, c=str(10 ** 30)),
            ],
        ))

        self.assertEqual(TriGradedSeries.from_json(series.to_json()), series)

    def test_malformed(self):
        """bad payloads"""
        with self.assertRaises(SeriesException):
            TriGradedSeries.from_json(dict(cutoff=3))

        with self.assertRaises(SeriesException):
            TriGradedSeries.from_json(dict(cutoff=3, terms=[dict(n1=0, n2=0, d=0, c='x')]))


if __name__ == '__main__':
    unittest.main()
