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

import random
import unittest

from fractions import Fraction

from ortho.wendroff.exact import (
    MonicPolynomial, Polynomial, axpy, derivative, evaluate, format_rational, mul_x,
    parse_rational, polydivmod, polygcd)


class TestParseRational(unittest.TestCase):
    def test_strings(self):
        self.assertEqual(parse_rational('-5/4'), Fraction(-5, 4))
        self.assertEqual(parse_rational('6/4'), Fraction(3, 2))
        self.assertEqual(parse_rational('+7'), Fraction(7))
        self.assertEqual(parse_rational(' 2/3 '), Fraction(2, 3))

    def test_passthrough(self):
        self.assertEqual(parse_rational(3), Fraction(3))
        q = Fraction(1, 3)
        self.assertEqual(parse_rational(q), q)

    def test_invalid(self):
        with self.assertRaises(TypeError):
            parse_rational(0.5)
        with self.assertRaises(TypeError):
            parse_rational(True)
        with self.assertRaises(ValueError):
            parse_rational('0.5')
        with self.assertRaises(ValueError):
            parse_rational('1/0')
        with self.assertRaises(ValueError):
            parse_rational('one')

    def test_canonical_form(self):
        for text in ['-18/19', '0', '12', '-1', '140/17']:
            with self.subTest(text=text):
                self.assertEqual(format_rational(parse_rational(text)), text)
        self.assertEqual(format_rational(parse_rational('10/20')), '1/2')


class TestPolynomial(unittest.TestCase):
    def test_construction(self):
        p = Polynomial([0, 0, 1, 0, -2])
        self.assertEqual(p.degree, 2)
        self.assertEqual(p.coeffs, (1, 0, -2))

        zero = Polynomial()
        self.assertTrue(zero.is_zero())
        self.assertEqual(zero.degree, -1)
        self.assertEqual(Polynomial([0, 0]), zero)

    def test_monic(self):
        self.assertTrue(Polynomial([1, 0, 2]).is_monic())
        self.assertFalse(Polynomial([2, 0, 2]).is_monic())
        with self.assertRaises(ValueError):
            MonicPolynomial([3, 1])
        self.assertEqual(MonicPolynomial(), Polynomial([1]))

    def test_symmetric(self):
        self.assertTrue(Polynomial([1, 0, -3, 0, 2, 0]).is_symmetric())
        self.assertTrue(Polynomial([1, 0, '-18/19']).is_symmetric())
        self.assertFalse(Polynomial([1, 1, 0]).is_symmetric())

    def test_beta(self):
        p = MonicPolynomial([1, 0, '-12/7', 0, '4/7'])
        self.assertEqual(p.beta(0), 1)
        self.assertEqual(p.beta(2), Fraction(-12, 7))
        self.assertEqual(p.beta(4), Fraction(4, 7))
        self.assertEqual(p.beta(7), 0)
        self.assertEqual(MonicPolynomial([1, 0]).beta(2), 0)
        self.assertEqual(MonicPolynomial([1]).beta(2), 0)
        with self.assertRaises(ValueError):
            p.beta(-1)

    def test_str(self):
        self.assertEqual(str(Polynomial([1, 0, '-12/7', 0, '4/7'])), 'x^4 - (12/7)x^2 + 4/7')
        self.assertEqual(str(Polynomial([-1, 2])), '-x + 2')
        self.assertEqual(str(Polynomial()), '0')
        self.assertEqual(str(Polynomial([5])), '5')

    def test_json(self):
        p = Polynomial([1, 0, '-72/17', 0, '70/17', 0, '-12/17'])
        obj = p.to_json()
        self.assertEqual(obj, {'degree': 6,
                               'coeffs': ['1', '0', '-72/17', '0', '70/17', '0', '-12/17']})
        self.assertEqual(Polynomial.from_json(obj), p)

    def test_json_invalid(self):
        with self.assertRaises(ValueError):
            Polynomial.from_json({'degree': 3, 'coeffs': ['1', '0']})
        with self.assertRaises(ValueError):
            Polynomial.from_json({'degree': 1, 'coeffs': ['0', '1']})

    def test_operators(self):
        p = Polynomial([1, 2])
        q = Polynomial([1, -2])
        self.assertEqual(p + q, Polynomial([2, 0]))
        self.assertEqual(p - q, Polynomial([4]))
        self.assertEqual(-p, Polynomial([-1, -2]))
        self.assertEqual(p * q, Polynomial([1, 0, -4]))
        self.assertEqual(p * Fraction(1, 2), Polynomial(['1/2', 1]))
        self.assertEqual(3 * p, Polynomial([3, 6]))


class TestMulX(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(mul_x(MonicPolynomial([1, 0, '-18/19'])),
                         Polynomial([1, 0, '-18/19', 0]))
        self.assertEqual(mul_x(MonicPolynomial([1])), Polynomial([1, 0]))
        self.assertEqual(mul_x(Polynomial([1, 0, '-10/9', 0])),
                         Polynomial([1, 0, '-10/9', 0, 0]))

    def test_preserves_monic_type(self):
        self.assertIsInstance(mul_x(MonicPolynomial([1, 3])), MonicPolynomial)
        self.assertTrue(mul_x(Polynomial()).is_zero())

    def test_evaluation_identity(self):
        rng = random.Random(5)
        p = Polynomial([1, '-3/7', 0, 5, '1/2'])
        for _ in range(20):
            t = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
            self.assertEqual(mul_x(p)(t), t * p(t))


class TestAxpy(unittest.TestCase):
    def test_self_cancellation(self):
        c2 = Polynomial([1, 0, 2])
        self.assertTrue(axpy(c2, c2, -1).is_zero())

    def test_examples(self):
        d5 = Polynomial([1, 0, -3, 0, 2, 0])
        d4 = Polynomial([1, 0, '-12/7', 0, '4/7'])
        self.assertEqual(axpy(d5, d4, '-21/17'),
                         Polynomial([1, '-21/17', -3, '36/17', 2, '-12/17']))

        x2c3 = Polynomial([1, 0, -2, 0, 0, 0])
        c3 = Polynomial([1, 0, -2, 0])
        self.assertEqual(axpy(x2c3, c3, -1), Polynomial([1, 0, -3, 0, 2, 0]))

    def test_linearity(self):
        rng = random.Random(11)
        for _ in range(5):
            p = Polynomial([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(6)])
            q = Polynomial([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)])
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            r = axpy(p, q, c)
            for _ in range(20):
                t = Fraction(rng.randint(-30, 30), rng.randint(1, 30))
                self.assertEqual(r(t), p(t) + c * q(t))


class TestEvaluate(unittest.TestCase):
    def test_examples(self):
        d5 = Polynomial([1, 0, -3, 0, 2, 0])
        self.assertEqual(evaluate(d5, 2), 12)
        d8 = Polynomial([1, 0, '-106/17', 0, '193/17', 0, '-116/17', 0, '12/17'])
        self.assertEqual(d8(1), 0)
        self.assertEqual(d8(-1), 0)
        self.assertEqual(d8(0), Fraction(12, 17))
        self.assertEqual(Polynomial()(3), 0)


class TestDerivative(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(derivative(Polynomial([1, 0, '-18/19'])), Polynomial([2, 0]))
        self.assertEqual(derivative(Polynomial([1, 0, -3, 0, 2, 0])),
                         Polynomial([5, 0, -9, 0, 2]))
        self.assertEqual(derivative(Polynomial([1, 0])), Polynomial([1]))
        self.assertTrue(derivative(Polynomial([7])).is_zero())


class TestDivision(unittest.TestCase):
    def test_divmod(self):
        p = Polynomial([1, 0, -3, 0, 2, 0])
        q = Polynomial([1, 0, -1])
        quotient, remainder = polydivmod(p, q)
        self.assertEqual(quotient, Polynomial([1, 0, -2, 0]))
        self.assertTrue(remainder.is_zero())

        quotient, remainder = polydivmod(Polynomial([1, 0, 1]), Polynomial([2, 1]))
        self.assertEqual(quotient * Polynomial([2, 1]) + remainder, Polynomial([1, 0, 1]))
        self.assertLess(remainder.degree, 1)

    def test_divide_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            polydivmod(Polynomial([1]), Polynomial())

    def test_low_degree(self):
        quotient, remainder = polydivmod(Polynomial([1, 2]), Polynomial([1, 0, 0]))
        self.assertTrue(quotient.is_zero())
        self.assertEqual(remainder, Polynomial([1, 2]))

    def test_gcd(self):
        p = Polynomial([1, 0, -1]) * Polynomial([1, 0, -2, 0])
        q = Polynomial([2, 2])
        self.assertEqual(polygcd(p, q), Polynomial([1, 1]))
        self.assertEqual(polygcd(Polynomial([1, 0, 2]), Polynomial([1, 0])), Polynomial([1]))
        self.assertTrue(polygcd(Polynomial(), Polynomial()).is_zero())
