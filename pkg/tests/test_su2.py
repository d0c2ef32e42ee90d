# Copyright (c) 2020, NVIDIA CORPORATION. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import sys
sys.path.append("../common")

import cmath
import math
import unittest

from hypothesis import given, settings, strategies as st

from zafa.su2.characters import (CirclePoint, chi_l, chi_closed_form,
                                 chi_finite_sum, circle_grid)
from zafa.su2.trig_poly import (CentralTrigPoly, clebsch_gordan,
                                multiply_polys, SUPPORT_CAP)
from zafa.su2.derivation import (point_derivation, derivation_bound,
                                 weight_sum_derivation,
                                 finite_difference_derivation,
                                 derivation_identity_check, bound_sweep)
from zafa.zafa_exceptions import ZAFAException
import test_result_collector as trc

SMALL_POLY = st.dictionaries(st.integers(min_value=0, max_value=12),
                             st.floats(min_value=-3, max_value=3),
                             max_size=4)


class TestSU2Methods(trc.TestResultCollector):
    def test_circle_point(self):
        point = CirclePoint(1j)
        self.assertTrue(point.is_upper())
        self.assertAlmostEqual(point.separation(), 4)
        self.assertAlmostEqual(point.angle(), math.pi / 2)
        self.assertFalse(CirclePoint(-1j).is_upper())
        self.assertFalse(CirclePoint(1).is_upper())
        self.assertAlmostEqual(point.rotated(math.pi / 2).z(), -1)
        self.assertAlmostEqual(
            CirclePoint.from_angle(math.pi / 4).separation(), 2)

        with self.assertRaises(ZAFAException):
            CirclePoint(1.5j)

    def test_chi_l(self):
        self.assertAlmostEqual(chi_l(0, 1j), 1)
        self.assertAlmostEqual(chi_l(1, 1j), 0)
        self.assertAlmostEqual(chi_l(2, 1j), -1)
        self.assertAlmostEqual(chi_l(3, 1), 4)
        self.assertAlmostEqual(chi_l(3, -1), -4)
        self.assertAlmostEqual(chi_l(4, -1), 5)

        z = cmath.exp(0.7j)
        self.assertAlmostEqual(chi_l(1, z), 2 * math.cos(0.7))
        for l in [0, 1, 5, 17, 64, 200, 500]:
            self.assertAlmostEqual(chi_closed_form(l, z),
                                   chi_finite_sum(l, z),
                                   places=9)

        with self.assertRaises(ZAFAException):
            chi_l(-1, z)

    def test_circle_grid(self):
        points = circle_grid(5)
        self.assertEqual(len(points), 5)
        for point in points:
            self.assertGreater(point.z().imag, 0.1)
        self.assertEqual(circle_grid(0), [])
        with self.assertRaises(ZAFAException):
            circle_grid(3, min_imag=1.0)

    def test_clebsch_gordan(self):
        self.assertEqual(clebsch_gordan(1, 1), [0, 2])
        self.assertEqual(clebsch_gordan(2, 3), [1, 3, 5])
        self.assertEqual(clebsch_gordan(0, 4), [4])
        with self.assertRaises(ZAFAException):
            clebsch_gordan(-1, 2)

    def test_trig_poly(self):
        u = CentralTrigPoly({0: 1, 3: -2j})
        self.assertEqual(u.levels(), [0, 3])
        self.assertAlmostEqual(u.norm(), 9)
        self.assertFalse(u.is_zero())
        self.assertTrue(CentralTrigPoly({}).is_zero())
        self.assertEqual((u + u.scale(-1)).levels(), [])

        self.assertTrue(CentralTrigPoly.character(2, so3=True).so3())
        with self.assertRaises(ZAFAException):
            CentralTrigPoly({1: 1}, so3=True)
        with self.assertRaises(ZAFAException):
            CentralTrigPoly({-1: 1})
        with self.assertRaises(ZAFAException):
            CentralTrigPoly({SUPPORT_CAP + 1: 1})

    def test_multiply_polys(self):
        chi1 = CentralTrigPoly.character(1)
        product = multiply_polys(chi1, chi1)
        self.assertEqual(product.coeffs(), {0: 1, 2: 1})

        u = CentralTrigPoly({1: 2, 2: 1})
        v = CentralTrigPoly({1: 1j})
        z = cmath.exp(1.1j)
        self.assertAlmostEqual(
            multiply_polys(u, v).evaluate(z),
            u.evaluate(z) * v.evaluate(z))

        so3 = multiply_polys(CentralTrigPoly.character(2, so3=True),
                             CentralTrigPoly.character(4, so3=True))
        self.assertTrue(so3.so3())
        self.assertEqual(so3.levels(), [2, 4, 6])

    def test_point_derivation(self):
        z = cmath.exp(0.9j)
        chi1 = CentralTrigPoly.character(1)
        self.assertAlmostEqual(point_derivation(z, chi1), z - 1 / z)
        self.assertAlmostEqual(
            point_derivation(z, CentralTrigPoly.character(0)), 0)
        self.assertAlmostEqual(
            point_derivation(z, CentralTrigPoly.character(2)),
            2 * z**2 - 2 * z**-2)

        for bad in [-1j, 1, -1, cmath.exp(-0.3j)]:
            with self.assertRaisesRegex(ZAFAException, 'real-eigenvalue'):
                point_derivation(bad, chi1)

    def test_derivation_bound(self):
        z = CirclePoint.from_angle(math.pi / 4)
        chi5 = CentralTrigPoly.character(5)
        self.assertAlmostEqual(derivation_bound(z, chi5), 12)
        self.assertLessEqual(abs(point_derivation(z, chi5)), 12 + 1e-12)

        rows = bound_sweep(range(0, 40), circle_grid(10))
        self.assertEqual(len(rows), 400)
        for row in rows:
            self.assertGreaterEqual(row['slack'], -1e-12)
        self.assertEqual(sorted(rows[0]), [
            'abs_derivation', 'bound', 'l', 'slack', 'z'
        ])

    def test_agreement(self):
        u = CentralTrigPoly({0: 0.5, 1: 1, 4: -2j, 9: 0.25})
        for point in circle_grid(7):
            exact = point_derivation(point, u)
            self.assertAlmostEqual(weight_sum_derivation(point, u),
                                   exact,
                                   places=10)
            self.assertLess(abs(finite_difference_derivation(point, u) -
                                exact), 1e-6 * max(1, abs(exact)))

    def test_so3_nontrivial(self):
        chi2 = CentralTrigPoly.character(2, so3=True)
        values = [abs(point_derivation(p, chi2)) for p in circle_grid(9)]
        self.assertGreater(max(values), 0.1)

    @settings(max_examples=40, deadline=None)
    @given(SMALL_POLY, SMALL_POLY,
           st.floats(min_value=0.2, max_value=math.pi - 0.2))
    def test_derivation_identity(self, first, second, theta):
        u = CentralTrigPoly(first)
        v = CentralTrigPoly(second)
        z = CirclePoint.from_angle(theta)
        scale = 1 + derivation_bound(z, u) * v.norm() + \
            derivation_bound(z, v) * u.norm()
        self.assertLess(derivation_identity_check(z, u, v), 1e-9 * scale)


if __name__ == '__main__':
    unittest.main()
