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

import unittest

import numpy as np

from zafa.group.group_factory import GroupFactory
from zafa.group.constructions import quotient_group
from zafa.character.character_table import compute_character_table
from zafa.character.quotient import (characters_through_quotient,
                                     project_PN, coset_average, inflate)
from zafa.algebra.central_element import CentralElement, za_norm
from zafa.algebra.class_function import to_class_function
from zafa.zafa_exceptions import ZAFAException
import test_result_collector as trc

# Absolute slack for entries that vanish up to round-off
ATOL = 1e-12


class TestQuotientMethods(trc.TestResultCollector):
    @classmethod
    def setUpClass(cls):
        cls.s3 = GroupFactory.from_catalog('S3')
        cls.s3_table = compute_character_table(cls.s3)
        conjugacy = cls.s3_table.conjugacy()
        three_cycles = list(conjugacy.sizes()).index(2)
        cls.a3 = [0] + [int(x) for x in conjugacy.classes()[three_cycles]]

    def test_characters_through_quotient(self):
        self.assertEqual(
            characters_through_quotient(self.s3, self.s3_table, self.a3),
            [0, 1])
        self.assertEqual(
            characters_through_quotient(self.s3, self.s3_table, range(6)),
            [0])
        self.assertEqual(
            characters_through_quotient(self.s3, self.s3_table, [0]),
            [0, 1, 2])

        q8 = GroupFactory.from_catalog('Q8')
        table = compute_character_table(q8)
        center = [0] + [int(x) for x in table.conjugacy().classes()[1]]
        self.assertEqual(characters_through_quotient(q8, table, center),
                         [0, 1, 2, 3])

        with self.assertRaisesRegex(ZAFAException,
                                    'invalid normal subgroup'):
            characters_through_quotient(self.s3, self.s3_table, [0, 1])

    def test_project_PN(self):
        u = CentralElement(self.s3_table, [1, 2, 3])
        projected = project_PN(u, self.s3, self.a3)
        np.testing.assert_allclose(projected.coeffs(), [1, 2, 0], atol=ATOL)
        np.testing.assert_allclose(
            project_PN(projected, self.s3, self.a3).coeffs(),
            projected.coeffs(), atol=ATOL)
        self.assertLessEqual(za_norm(projected), za_norm(u))

    def test_coset_average(self):
        rng = np.random.default_rng(7)
        for name in ['S3', 'Q8', 'A4']:
            group = GroupFactory.from_catalog(name)
            table = compute_character_table(group)
            conjugacy = table.conjugacy()
            if name == 'S3':
                subgroup = self.a3
            elif name == 'Q8':
                subgroup = [0] + [int(x) for x in conjugacy.classes()[1]]
            else:
                # the Klein four-group: identity and the class of size 3
                size_three = list(conjugacy.sizes()).index(3)
                subgroup = [0] + [
                    int(x) for x in conjugacy.classes()[size_three]
                ]
            u = CentralElement(table, rng.standard_normal(table.k()))
            averaged = coset_average(group, table, subgroup,
                                     to_class_function(u))
            expected = to_class_function(project_PN(u, group, subgroup))
            self.assertLess(averaged.max_deviation(expected), 1e-12,
                            msg=name)

    def test_inflate(self):
        quotient, coset_of = quotient_group(self.s3, self.a3)
        quotient_table = compute_character_table(quotient)
        u = CentralElement(quotient_table, [0.5, -2])
        inflated = inflate(u, quotient, coset_of, self.s3, self.s3_table)
        np.testing.assert_allclose(inflated.coeffs(), [0.5, -2, 0],
                                   atol=1e-12)
        self.assertAlmostEqual(za_norm(inflated), za_norm(u))
        np.testing.assert_allclose(
            project_PN(inflated, self.s3, self.a3).coeffs(),
            inflated.coeffs(), atol=ATOL)


if __name__ == '__main__':
    unittest.main()
