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

import itertools
import json
import unittest

from fractions import Fraction

from parameterized import parameterized

from ortho.wendroff.analysis import (
    check_bdj_ordering, check_containment, check_interlacing, check_quasi_ordering,
    check_seed_zeros, check_ultraspherical_containment, compare, decide, verify_sequence)
from ortho.wendroff.embedding import WendroffConfig, WendroffSequence, build
from ortho.wendroff.exact import Polynomial
from ortho.wendroff.exceptions import PreconditionError, UndecidableOrderingError
from ortho.wendroff.roots import RootInterval, RootSet, find_roots, refine
from ortho.wendroff.ultraspherical import UltrasphericalParams, ultraspherical


def setUpModule():
    global EXAMPLE, EXAMPLE_ROOTS
    EXAMPLE = build(WendroffConfig.from_parameters('-5/4', n=5, k=5, sigma=2))
    EXAMPLE_ROOTS = [find_roots(p) for p in EXAMPLE.polys]


def ultraspherical_roots(m, lam):
    return find_roots(ultraspherical(m, UltrasphericalParams(lam)))


class TestInterlacing(unittest.TestCase):
    @parameterized.expand([(m,) for m in range(1, 11)])
    def test_example(self, m):
        self.assertTrue(check_interlacing(EXAMPLE_ROOTS[m - 1], EXAMPLE_ROOTS[m]))

    def test_wrong_counts(self):
        self.assertFalse(check_interlacing(EXAMPLE_ROOTS[4], EXAMPLE_ROOTS[4]))
        self.assertFalse(check_interlacing(EXAMPLE_ROOTS[3], EXAMPLE_ROOTS[5]))

    def test_quasi_orthogonal_pair_does_not_interlace(self):
        self.assertFalse(check_interlacing(ultraspherical_roots(4, '-5/4'),
                                           ultraspherical_roots(5, '-5/4')))

    def test_shared_root(self):
        # x^3 - x and x^4 - 5x^2 + 4 both vanish at -1 and 1
        lo = find_roots(Polynomial([1, 0, -1, 0]))
        hi = find_roots(Polynomial([1, 0, -5, 0, 4]))
        self.assertFalse(check_interlacing(lo, hi))

    def test_interval_ending_at_a_root(self):
        # (-19/9, 0) holds -sqrt(10/9) and ends at the root 0
        hi = RootSet(Polynomial([1, 0, '-10/9', 0]),
                     [RootInterval(Fraction(-19, 9), Fraction(0)),
                      RootInterval.point(Fraction(0)),
                      RootInterval(Fraction(0), Fraction(19, 9))])
        lo = RootSet(Polynomial([1, 0, '-1/4']),
                     [RootInterval.point(Fraction(-1, 2)), RootInterval.point(Fraction(1, 2))])
        self.assertTrue(check_interlacing(lo, hi))

    @parameterized.expand(itertools.product(['-2/5', '1/4', '1', '7/4'], range(2, 13)))
    def test_orthogonal_range(self, lam, m):
        prev, cur = ultraspherical_roots(m - 1, lam), ultraspherical_roots(m, lam)
        self.assertTrue(decide(check_interlacing, prev, cur))
        self.assertTrue(check_containment(cur, 1))


class TestQuasiOrdering(unittest.TestCase):
    @parameterized.expand([
        (lam, n) for lam in ['-5/4', '-9/8', '-7/8'] for n in [5, 6, 8]])
    def test_ordering(self, lam, n):
        params = UltrasphericalParams(lam)
        self.assertTrue(check_quasi_ordering(ultraspherical_roots(n - 1, lam),
                                             ultraspherical_roots(n, lam), params))

    def test_orthogonal_range(self):
        with self.assertRaises(PreconditionError):
            check_quasi_ordering(ultraspherical_roots(4, '1'), ultraspherical_roots(5, '1'),
                                 UltrasphericalParams(1))

    def test_degrees(self):
        params = UltrasphericalParams('-5/4')
        with self.assertRaises(PreconditionError):
            check_quasi_ordering(ultraspherical_roots(3, '-5/4'),
                                 ultraspherical_roots(5, '-5/4'), params)
        with self.assertRaises(PreconditionError):
            check_quasi_ordering(ultraspherical_roots(2, '-5/4'),
                                 ultraspherical_roots(3, '-5/4'), params)

    def test_wendroff_pair_is_not_quasi_ordered(self):
        self.assertFalse(check_quasi_ordering(EXAMPLE_ROOTS[4], EXAMPLE_ROOTS[5],
                                              UltrasphericalParams('-5/4')))


class TestBdjOrdering(unittest.TestCase):
    @parameterized.expand([(5,), (9,)])
    def test_example(self, m):
        self.assertTrue(check_bdj_ordering(*EXAMPLE_ROOTS[m - 1:m + 2]))

    def test_even_seed_degree(self):
        # D_5 and D_7 share the root 0, which neither chain orders
        seq = build(WendroffConfig.from_parameters('-5/4', n=6, k=1))
        z5, z6, z7 = (find_roots(seq[m]) for m in (5, 6, 7))
        self.assertTrue(decide(check_bdj_ordering, z5, z6, z7))

    def test_counts(self):
        z = EXAMPLE_ROOTS[5]
        self.assertFalse(check_bdj_ordering(z, z, z))


class TestContainment(unittest.TestCase):
    def test_example(self):
        for m, z in enumerate(EXAMPLE_ROOTS):
            with self.subTest(m=m):
                self.assertTrue(check_containment(z, EXAMPLE.a))

    def test_outside(self):
        # x^3 - 2x
        self.assertFalse(check_containment(ultraspherical_roots(3, '-5/4'), 1))
        self.assertFalse(check_containment(EXAMPLE_ROOTS[10], '19/10'))

    def test_root_at_radius(self):
        self.assertFalse(check_containment(EXAMPLE_ROOTS[5], 1))
        self.assertTrue(check_containment(EXAMPLE_ROOTS[5], '3/2'))

    def test_empty(self):
        self.assertTrue(check_containment(EXAMPLE_ROOTS[0], '1/2'))

    def test_ultraspherical(self):
        self.assertTrue(check_ultraspherical_containment(
            UltrasphericalParams('-3/4'), '10/9', range(3, 9)))
        self.assertTrue(check_ultraspherical_containment(
            UltrasphericalParams('-5/4'), 2, range(3, 11)))
        self.assertFalse(check_ultraspherical_containment(
            UltrasphericalParams('-5/4'), 1, [3]))
        self.assertTrue(check_ultraspherical_containment(UltrasphericalParams('-5/4'), 1, []))


class TestSeedZeros(unittest.TestCase):
    def test_quasi_orthogonal(self):
        self.assertTrue(check_seed_zeros(EXAMPLE))
        self.assertTrue(check_seed_zeros(EXAMPLE, EXAMPLE_ROOTS[5]))

    def test_orthogonal(self):
        seq = build(WendroffConfig.from_parameters('3/10', n=7, k=1, a_mode='theorem',
                                                   epsilon='1/10'))
        self.assertTrue(check_seed_zeros(seq, find_roots(seq[7])))

    def test_tampered(self):
        polys = list(EXAMPLE.polys)
        polys[5] = Polynomial([1, 0, -3, 0, 3, 0])
        seq = WendroffSequence(EXAMPLE.config, polys, EXAMPLE.ells)
        self.assertFalse(check_seed_zeros(seq))

    def test_wrong_position(self):
        # roots of the wrong polynomial
        self.assertFalse(check_seed_zeros(EXAMPLE, EXAMPLE_ROOTS[4]))


class TestDecide(unittest.TestCase):
    def setUp(self):
        # roots 5/4 and 7/4 against 13/10, isolated coarsely enough to overlap
        self.hi = RootSet(Polynomial([1, -3, '35/16']),
                          [RootInterval(Fraction(0), Fraction(3, 2)),
                           RootInterval(Fraction(3, 2), Fraction(3))])
        self.lo = RootSet(Polynomial([1, '-13/10']), [RootInterval(Fraction(1), Fraction(2))])

    def test_undecidable(self):
        with self.assertRaises(UndecidableOrderingError):
            check_interlacing(self.lo, self.hi)

    def test_refines(self):
        self.assertTrue(decide(check_interlacing, self.lo, self.hi))

    def test_gives_up(self):
        with self.assertRaises(UndecidableOrderingError):
            decide(check_interlacing, self.lo, self.hi, max_rounds=0)

    def test_equal_roots_decided_exactly(self):
        # both vanish at sqrt(2), inside overlapping intervals
        a = RootSet(Polynomial([1, 0, -2]), [RootInterval(Fraction(-2), Fraction(-1)),
                                             RootInterval(Fraction(1), Fraction(2))])
        b = RootSet(Polynomial([1, 0, -2]) * Polynomial([1, -3]),
                    [RootInterval(Fraction(-3, 2), Fraction(-1)),
                     RootInterval(Fraction(5, 4), Fraction(3, 2)),
                     RootInterval(Fraction(2), Fraction(4))])
        self.assertFalse(check_interlacing(a, b))


class TestCompare(unittest.TestCase):
    def test_seed_predecessor_matches(self):
        report = compare(EXAMPLE_ROOTS[4], ultraspherical_roots(4, '-5/4'))
        self.assertEqual(report.max_delta, 0.0)
        self.assertFalse(report.count_mismatch)

    def test_extremes_differ(self):
        report = compare(EXAMPLE_ROOTS[5], ultraspherical_roots(5, '-5/4'))
        smallest, largest = report.extreme_deltas
        self.assertGreater(abs(largest), 1e-3)
        self.assertAlmostEqual(smallest, -largest, places=9)
        self.assertEqual(report.pairs, tuple((j, j) for j in range(5)))

    def test_count_mismatch(self):
        # x^2 + 2 has no real zeros
        report = compare(EXAMPLE_ROOTS[2], ultraspherical_roots(2, '-5/4'))
        self.assertTrue(report.count_mismatch)
        self.assertEqual(report.pairs, ())
        self.assertEqual(report.extreme_deltas, (None, None))
        self.assertEqual(report.max_delta, 0.0)

    def test_prefix_suffix_pairing(self):
        zd = find_roots(Polynomial([1, 0, -5, 0, 4]))
        zc = find_roots(Polynomial([1, 0, -2]))
        report = compare(zd, zc)
        self.assertEqual(report.pairs, ((0, 0), (3, 1)))

    def test_outputs(self):
        report = compare(EXAMPLE_ROOTS[6], ultraspherical_roots(6, '-5/4'))
        obj = json.loads(json.dumps(report.to_json()))
        self.assertEqual(obj['degree'], 6)
        self.assertEqual(len(obj['deltas']), 6)
        rows = report.to_csv().splitlines()
        self.assertEqual(rows[0], 'index,zero_D,zero_C,delta')
        self.assertEqual(len(rows), 7)


class TestVerify(unittest.TestCase):
    def test_example(self):
        report = verify_sequence(EXAMPLE)
        self.assertTrue(report.overall)
        self.assertEqual(report.summary(), 'OK: 11/11 degrees verified')
        self.assertEqual(report.failures, [])
        self.assertGreaterEqual(report.info['elapsed'], 0)

    def test_threaded(self):
        serial = verify_sequence(EXAMPLE)
        threaded = verify_sequence(EXAMPLE, max_workers=4)
        self.assertEqual(serial.records, threaded.records)

    def test_negated_ell(self):
        ells = dict(EXAMPLE.ells)
        ells[7] = -ells[7]
        report = verify_sequence(WendroffSequence(EXAMPLE.config, EXAMPLE.polys, ells))
        self.assertFalse(report.overall)
        self.assertEqual(report.summary(), 'FAILED: 10/11 degrees verified; failing degrees: 7')
        self.assertEqual(report.records[7].failed(), ['ell_positive', 'recurrence_ok'])

    def test_polynomial_without_real_zeros(self):
        polys = list(EXAMPLE.polys)
        polys[2] = Polynomial([1, 0, 2])
        report = verify_sequence(WendroffSequence(EXAMPLE.config, polys, EXAMPLE.ells))
        self.assertFalse(report.overall)
        self.assertIn('real_count_ok', report.records[2].failed())
        self.assertIn(2, {d.degree for d in report.failures})

    @parameterized.expand([
        ('-7/5', 7, '3/2'),
        ('-3/4', 6, '3'),
        ('3/10', 5, '2'),
        ])
    def test_other_parameters(self, lam, n, sigma):
        kwargs = dict(a_mode='theorem', epsilon='1/10') if Fraction(lam) > -Fraction(1, 2) else {}
        seq = build(WendroffConfig.from_parameters(lam, n=n, k=4, sigma=sigma, **kwargs))
        report = verify_sequence(seq, '1/10000')
        self.assertTrue(report.overall, report.summary())
        self.assertEqual(report.info['tol'], Fraction(1, 10000))

    def test_outputs(self):
        report = verify_sequence(EXAMPLE)
        obj = json.loads(json.dumps(report.to_json()))
        self.assertTrue(obj['overall'])
        self.assertEqual(len(obj['records']), 11)
        self.assertNotIn('elapsed', obj['info'])
        rows = report.to_csv().splitlines()
        self.assertEqual(len(rows), 12)
        self.assertTrue(rows[0].startswith('degree,monic,'))

    def test_long_sequence(self):
        seq = build(WendroffConfig.from_parameters('-5/4', n=10, k=58))
        report = verify_sequence(seq)
        self.assertTrue(report.overall, report.summary())
        self.assertEqual(report.summary(), 'OK: 69/69 degrees verified')


class TestToleranceRobustness(unittest.TestCase):
    @parameterized.expand([('1/100',), ('1/1000',), ('1/100000',)])
    def test_verify(self, tol):
        ells = dict(EXAMPLE.ells)
        ells[7] = -ells[7]
        tampered = WendroffSequence(EXAMPLE.config, EXAMPLE.polys, ells)
        for seq in (EXAMPLE, tampered):
            with self.subTest(seq=seq is EXAMPLE):
                coarse = verify_sequence(seq, tol)
                fine = verify_sequence(seq, Fraction(tol) / 10)
                self.assertEqual(coarse.records, fine.records)
                self.assertEqual(coarse.summary(), fine.summary())

    @parameterized.expand([('1/100',), ('1/1000',), ('1/100000',)])
    def test_orderings(self, tol):
        def at(rootsets, tol):
            return [refine(rs.poly, rs, tol) for rs in rootsets]

        triples = [[EXAMPLE[m] for m in (4, 5, 6)], [EXAMPLE[m] for m in (8, 9, 10)]]
        for polys in triples:
            coarse = [find_roots(p, tol) for p in polys]
            self.assertEqual(decide(check_bdj_ordering, *coarse),
                             decide(check_bdj_ordering, *at(coarse, Fraction(tol) / 10)))
            self.assertEqual(decide(check_interlacing, *coarse[:2]),
                             decide(check_interlacing, *at(coarse[:2], Fraction(tol) / 10)))

        params = UltrasphericalParams('-5/4')
        pair = [find_roots(ultraspherical(m, params), tol) for m in (4, 5)]
        self.assertEqual(decide(check_quasi_ordering, *pair, params=params),
                         decide(check_quasi_ordering, *at(pair, Fraction(tol) / 10),
                                params=params))
