# Copyright 2026 The ortho-wendroff Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import unittest
import warnings

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from parameterized import parameterized

from ortho.wendroff.exact import Polynomial
from ortho.wendroff.exceptions import ParameterDomainError, RadiusModeWarning
from ortho.wendroff.roots import real_root_count
from ortho.wendroff.ultraspherical import (
    IntervalRadius, RadiusMode, UltrasphericalParams, a1_squared, a2,
    extreme_zero_upper_bounds, interval_radius, recurrence_b, ultraspherical,
    ultraspherical_table, upper_sqrt)


class TestUltrasphericalParams(unittest.TestCase):
    @parameterized.expand([('-3/2',), ('-2',), ('0',), ('-1',), ('-1/2',), ('1/2',),
                           ('3/2',), ('7/2',)])
    def test_excluded(self, lam):
        with self.assertRaises(ParameterDomainError):
            UltrasphericalParams(lam)

    @parameterized.expand([('-5/4',), ('-7/5',), ('-3/4',), ('1',), ('11/10',), ('3',)])
    def test_admissible(self, lam):
        self.assertEqual(UltrasphericalParams(lam).lam, Fraction(lam))

    def test_float_rejected(self):
        with self.assertRaises(TypeError):
            UltrasphericalParams(-1.25)

    def test_quasi_orthogonal(self):
        self.assertTrue(UltrasphericalParams('-5/4').quasi_orthogonal)
        self.assertFalse(UltrasphericalParams('-1/4').quasi_orthogonal)


class TestRecurrence(unittest.TestCase):
    def test_b(self):
        self.assertEqual(recurrence_b(1, UltrasphericalParams('-5/4')), 0)
        self.assertEqual(recurrence_b(1, UltrasphericalParams(3)), 0)
        self.assertEqual(recurrence_b(2, UltrasphericalParams('-5/4')), -2)
        self.assertEqual(recurrence_b(3, UltrasphericalParams('-5/4')), 4)
        self.assertEqual(recurrence_b(4, UltrasphericalParams(1)), Fraction(1, 4))

    def test_b_invalid_degree(self):
        with self.assertRaises(ValueError):
            recurrence_b(0, UltrasphericalParams(1))

    @parameterized.expand([('1/4',), ('1',), ('3',)])
    def test_b_positive_in_orthogonal_range(self, lam):
        params = UltrasphericalParams(lam)
        for m in range(2, 13):
            self.assertGreater(recurrence_b(m, params), 0)


class TestUltraspherical(unittest.TestCase):
    def test_initial(self):
        params = UltrasphericalParams('-5/4')
        self.assertEqual(ultraspherical(0, params), Polynomial([1]))
        self.assertEqual(ultraspherical(1, params), Polynomial([1, 0]))

    def test_quasi_orthogonal_examples(self):
        params = UltrasphericalParams('-5/4')
        self.assertEqual(ultraspherical(2, params), Polynomial([1, 0, 2]))
        self.assertEqual(ultraspherical(3, params), Polynomial([1, 0, -2, 0]))
        self.assertEqual(ultraspherical(4, params), Polynomial([1, 0, '-12/7', 0, '4/7']))

    def test_c2_has_no_real_zeros(self):
        self.assertEqual(real_root_count(ultraspherical(2, UltrasphericalParams('-5/4'))), 0)

    @parameterized.expand([('-5/4',), ('-3/4',), ('1',), ('7/3',)])
    def test_monic_symmetric(self, lam):
        table = ultraspherical_table(14, UltrasphericalParams(lam))
        self.assertEqual(len(table), 15)
        for m, c in enumerate(table):
            with self.subTest(m=m):
                self.assertEqual(c.degree, m)
                self.assertTrue(c.is_monic())
                self.assertTrue(c.is_symmetric())
                self.assertEqual(c.beta(1), 0)

    def test_table_prefix(self):
        params = UltrasphericalParams('-9/8')
        long = ultraspherical_table(12, params)
        short = ultraspherical_table(5, params)
        self.assertEqual(long[:6], short)

    def test_negative_degree(self):
        with self.assertRaises(ValueError):
            ultraspherical_table(-1, UltrasphericalParams(1))

    def test_concurrent_cache(self):
        params = UltrasphericalParams('-13/10')
        with ThreadPoolExecutor(max_workers=4) as executor:
            tables = list(executor.map(lambda m: ultraspherical_table(m, params),
                                       [20, 5, 17, 20, 11, 3]))
        for table in tables:
            self.assertEqual(table, tables[0][:len(table)])


class TestBounds(unittest.TestCase):
    def test_upper_sqrt_exact(self):
        self.assertEqual(upper_sqrt(4), (2, 0))
        self.assertEqual(upper_sqrt(Fraction(9, 16)), (Fraction(3, 4), 0))

    @parameterized.expand([(2,), ('10',), ('2/3',), ('1/7',)])
    def test_upper_sqrt_certified(self, q):
        q = Fraction(q)
        value, slack = upper_sqrt(q)
        self.assertGreaterEqual(value * value, q)
        self.assertEqual(value * value - q, slack)
        self.assertLessEqual(slack, Fraction(1, 10**6))

    def test_upper_sqrt_invalid(self):
        with self.assertRaises(ValueError):
            upper_sqrt(-1)
        with self.assertRaises(ValueError):
            upper_sqrt(2, 0)

    def test_extreme_zero_bounds(self):
        _, algebraic = extreme_zero_upper_bounds(3, UltrasphericalParams('-5/4'))
        self.assertEqual(algebraic, 2)
        _, algebraic = extreme_zero_upper_bounds(4, UltrasphericalParams('-1/4'))
        self.assertEqual(algebraic, Fraction(27, 28))

        params = UltrasphericalParams('-3/4')
        sqrt_bound, _ = extreme_zero_upper_bounds(7, params)
        self.assertGreaterEqual(sqrt_bound ** 2, Fraction(6, 7 + 2 * params.lam))

        with self.assertRaises(ValueError):
            extreme_zero_upper_bounds(2, params)

    def test_a1_a2_ordering(self):
        below = ['-29/20', '-7/5', '-27/20', '-13/10', '-51/40']
        above = ['-6/5', '-9/8', '-7/8', '-3/4', '-3/5']
        for lam in below:
            params = UltrasphericalParams(lam)
            with self.subTest(lam=lam):
                self.assertLess(a1_squared(params), a2(params) ** 2)
        for lam in above:
            params = UltrasphericalParams(lam)
            with self.subTest(lam=lam):
                self.assertGreater(a1_squared(params), a2(params) ** 2)
        params = UltrasphericalParams('-5/4')
        self.assertEqual(a1_squared(params), a2(params) ** 2)

    @parameterized.expand([
        ('-5/4', RadiusMode.AUTO, Fraction(2)),
        ('-3/4', RadiusMode.AUTO, Fraction(10, 9)),
        ('-9/8', RadiusMode.AUTO, Fraction(14, 9)),
        ('-7/8', RadiusMode.AUTO, Fraction(6, 5)),
        ('-5/8', RadiusMode.AUTO, Fraction(22, 21)),
        ('-11/8', RadiusMode.A2, Fraction(10, 3)),
        ('1', RadiusMode.AUTO, Fraction(1)),
        ])
    def test_interval_radius(self, lam, mode, expected):
        radius = interval_radius(UltrasphericalParams(lam), mode)
        self.assertEqual(radius.value, expected)
        self.assertEqual(radius.slack, 0)
        self.assertNotEqual(radius.mode, RadiusMode.AUTO)

    def test_forced_a2_in_orthogonal_range_warns(self):
        with self.assertWarns(RadiusModeWarning):
            radius = interval_radius(UltrasphericalParams('-1/4'), 'a2')
        self.assertEqual(radius.value, Fraction(14, 15))

    def test_unit_in_quasi_range_warns(self):
        with self.assertWarns(RadiusModeWarning):
            interval_radius(UltrasphericalParams('-3/4'), 'unit')

    def test_auto_does_not_warn(self):
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            interval_radius(UltrasphericalParams('-1/4'))

    def test_a1(self):
        params = UltrasphericalParams('-7/5')
        radius = interval_radius(params)
        self.assertEqual(radius.mode, RadiusMode.A1)
        self.assertGreaterEqual(radius.value ** 2, a1_squared(params))
        self.assertLessEqual(radius.value ** 2 - a1_squared(params), Fraction(1, 10**6))
        self.assertEqual(radius.value ** 2 - a1_squared(params), radius.slack)

    def test_explicit(self):
        radius = interval_radius(UltrasphericalParams(1), 'explicit', value='3/2')
        self.assertEqual(radius, IntervalRadius(Fraction(3, 2), RadiusMode.EXPLICIT))
        with self.assertRaises(ParameterDomainError):
            interval_radius(UltrasphericalParams(1), 'explicit', value=0)
        with self.assertRaises(ParameterDomainError):
            interval_radius(UltrasphericalParams(1), 'explicit')

    def test_theorem(self):
        radius = interval_radius(UltrasphericalParams(1), 'theorem', epsilon='1/10', n=7)
        self.assertEqual(radius.value, Fraction(11, 10))
        self.assertEqual(radius.epsilon, Fraction(1, 10))

        params = UltrasphericalParams('-5/4')
        radius = interval_radius(params, 'theorem', epsilon='1/100', n=5)
        self.assertEqual(radius.value, Fraction(201, 100))

        with self.assertRaises(ParameterDomainError):
            interval_radius(params, 'theorem', n=5)
        with self.assertRaises(ParameterDomainError):
            interval_radius(params, 'theorem', epsilon=-1, n=5)
        with self.assertRaises(ParameterDomainError):
            interval_radius(params, 'theorem', epsilon=1, n=4)

    def test_invalid_radius(self):
        with self.assertRaises(ParameterDomainError):
            IntervalRadius(Fraction(-1), RadiusMode.EXPLICIT)
