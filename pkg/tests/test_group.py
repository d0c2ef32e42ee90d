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
from zafa.group.finite_group import FiniteGroup
from zafa.group.constructions import (from_permutation_generators,
                                      direct_product, quotient_group,
                                      verify_normal_subgroup)
from zafa.group.conjugacy import conjugacy_classes, class_constants
from zafa.zafa_exceptions import ZAFAException
import test_result_collector as trc


def _class_with_size(conjugacy, size):
    return [
        j for j in range(conjugacy.num_classes())
        if conjugacy.sizes()[j] == size
    ]


class TestGroupMethods(trc.TestResultCollector):
    def test_permutation_closure(self):
        s3 = from_permutation_generators(3, [[1, 0, 2], [1, 2, 0]])
        self.assertEqual(s3.order(), 6)
        self.assertEqual(s3.identity(), 0)
        self.assertEqual(s3.element_words()[:3], ['e', 'g0', 'g1'])
        for x in range(6):
            self.assertEqual(s3.multiply(x, s3.inverse(x)), 0)
        self.assertTrue(s3.check_associativity())
        self.assertFalse(s3.is_abelian())

        trivial = from_permutation_generators(1, [], label='trivial')
        self.assertEqual(trivial.order(), 1)
        self.assertEqual(trivial.label(), 'trivial')

        z4 = from_permutation_generators(4, [[1, 2, 3, 0]])
        self.assertEqual(z4.order(), 4)
        self.assertTrue(z4.is_abelian())

    def test_permutation_errors(self):
        with self.assertRaises(ZAFAException):
            from_permutation_generators(3, [[0, 0, 1]])
        with self.assertRaises(ZAFAException):
            from_permutation_generators(3, [[0, 1]])
        with self.assertRaises(ZAFAException):
            from_permutation_generators(0, [])
        with self.assertRaisesRegex(ZAFAException, 'order cap exceeded'):
            from_permutation_generators(5, [[1, 0, 2, 3, 4],
                                            [1, 2, 3, 4, 0]],
                                        order_cap=50)

    def test_catalog(self):
        expected = {
            'Z1': 1,
            'Z7': 7,
            'C5': 5,
            'D4': 8,
            'D5': 10,
            'S3': 6,
            'S4': 24,
            'A4': 12,
            'A5': 60,
            'A6': 360,
            'Q8': 8,
            'S3xZ2': 12,
            'Z2xZ2xZ2': 8
        }
        for name, order in expected.items():
            group = GroupFactory.from_catalog(name)
            self.assertEqual(group.order(), order, msg=name)
            self.assertTrue(group.check_associativity(), msg=name)

        self.assertFalse(GroupFactory.from_catalog('Q8').is_abelian())
        self.assertTrue(GroupFactory.from_catalog('Z2xZ3').is_abelian())
        for name in ['Z0', 'X3', 'S9', 'Q6', 'D2', '']:
            with self.assertRaises(ZAFAException, msg=name):
                GroupFactory.from_catalog(name)

    def test_from_spec(self):
        group = GroupFactory.from_spec({'catalog': 'S3'})
        self.assertEqual(group.order(), 6)

        group = GroupFactory.from_spec({
            'permutation': {
                'degree': 4,
                'generators': [[1, 0, 2, 3], [0, 1, 3, 2]],
                'label': 'V4'
            }
        })
        self.assertEqual(group.order(), 4)
        self.assertEqual(group.label(), 'V4')

        group = GroupFactory.from_spec(
            {'product': [{
                'catalog': 'S3'
            }, {
                'catalog': 'Z2'
            }]})
        self.assertEqual(group.order(), 12)

        malformed = [{}, [], {
            'catalog': 3
        }, {
            'permutation': {
                'degree': 3
            }
        }, {
            'product': []
        }, {
            'lie': 'SU2'
        }, {
            'catalog': 'S3',
            'product': []
        }]
        for spec in malformed:
            with self.assertRaises(ZAFAException, msg=repr(spec)):
                GroupFactory.from_spec(spec)

        with self.assertRaisesRegex(ZAFAException, 'order cap exceeded'):
            GroupFactory.from_spec({'catalog': 'S5xS5'}, order_cap=1000)

    def test_digest(self):
        first = GroupFactory.from_catalog('S3')
        second = GroupFactory.from_catalog('S3')
        self.assertEqual(first.digest(), second.digest())
        self.assertNotEqual(first.digest(),
                            GroupFactory.from_catalog('Z6').digest())

    def test_from_table(self):
        group = FiniteGroup.from_table([[0, 1], [1, 0]], label='Z2')
        self.assertEqual(group.order(), 2)
        self.assertEqual(group.inverse(1), 1)

        with self.assertRaises(ZAFAException):
            FiniteGroup.from_table([[0, 1, 2], [1, 2, 0]], label='bad')
        with self.assertRaises(ZAFAException):
            FiniteGroup.from_table([[1, 0], [0, 0]], label='bad')

    def test_associativity_failure(self):
        # (1*2)*1 = 1 but 1*(2*1) = 0
        table = [[0, 1, 2], [1, 0, 2], [2, 1, 0]]
        group = FiniteGroup.from_table(table, label='loop')
        self.assertFalse(group.check_associativity())

    def test_direct_product(self):
        z2 = GroupFactory.create_cyclic(2)
        z3 = GroupFactory.create_cyclic(3)
        z6 = direct_product(z2, z3)
        self.assertEqual(z6.label(), 'Z2xZ3')
        self.assertEqual(z6.order(), 6)
        self.assertTrue(z6.check_associativity())
        # (g, h) has index g*|H| + h
        for a in range(6):
            for b in range(6):
                g1, h1 = divmod(a, 3)
                g2, h2 = divmod(b, 3)
                self.assertEqual(
                    z6.multiply(a, b),
                    z2.multiply(g1, g2) * 3 + z3.multiply(h1, h2))
        with self.assertRaises(ZAFAException):
            direct_product(z2, z3, order_cap=5)

    def test_conjugacy_classes(self):
        s3 = conjugacy_classes(GroupFactory.from_catalog('S3'))
        self.assertEqual(list(s3.sizes()), [1, 2, 3])
        self.assertEqual(list(s3.classes()[0]), [0])

        q8 = conjugacy_classes(GroupFactory.from_catalog('Q8'))
        self.assertEqual(list(q8.sizes()), [1, 1, 2, 2, 2])

        z5 = conjugacy_classes(GroupFactory.from_catalog('Z5'))
        self.assertEqual(z5.num_classes(), 5)
        self.assertTrue((z5.sizes() == 1).all())

        a5 = conjugacy_classes(GroupFactory.from_catalog('A5'))
        self.assertEqual(sorted(a5.sizes()), [1, 12, 12, 15, 20])

        for name in ['S3', 'Q8', 'A4', 'D5']:
            group = GroupFactory.from_catalog(name)
            conjugacy = conjugacy_classes(group)
            inverse_class = conjugacy.inverse_class()
            self.assertTrue(
                (inverse_class[inverse_class] == np.arange(
                    conjugacy.num_classes())).all())
            self.assertEqual(sum(conjugacy.sizes()), group.order())

        # A4 has two mutually inverse classes of 3-cycles
        a4 = conjugacy_classes(GroupFactory.from_catalog('A4'))
        fours = _class_with_size(a4, 4)
        self.assertEqual(len(fours), 2)
        self.assertEqual(a4.inverse_class()[fours[0]], fours[1])

    def test_conjugacy_invariance(self):
        for name in ['S3', 'Q8', 'A4', 'D5', 'S4', 'A5', 'A6', 'S3xZ2']:
            group = GroupFactory.from_catalog(name)
            conjugacy = conjugacy_classes(group)
            table, inverses = group.table(), group.inverses()
            class_of = conjugacy.class_of()
            for g in range(group.order()):
                # x -> g^-1 x g keeps every element in its class
                conjugated = table[table[inverses[g]], g]
                self.assertTrue((class_of[conjugated] == class_of).all(),
                                msg=name)
            self.assertTrue((group.order() % conjugacy.sizes() == 0).all(),
                            msg=name)

        a6 = conjugacy_classes(GroupFactory.from_catalog('A6'))
        self.assertEqual(sorted(a6.sizes()), [1, 40, 40, 45, 72, 72, 90])

    def test_conjugacy_without_table(self):
        s4 = GroupFactory.from_catalog('S4')
        table = s4.table()
        tableless = FiniteGroup(order=s4.order(),
                                identity=s4.identity(),
                                inverse=s4.inverses(),
                                label='S4',
                                signature=s4.signature(),
                                multiply_fn=lambda a, b: table[a, b],
                                generators=s4.generators())
        expected = conjugacy_classes(s4)
        actual = conjugacy_classes(tableless)
        np.testing.assert_array_equal(actual.class_of(), expected.class_of())

        s5 = GroupFactory.from_catalog('S5')
        product = direct_product(s5, s5)
        self.assertIsNone(product.table())
        self.assertEqual(len(product.generators()), 2 * len(s5.generators()))
        conjugacy = conjugacy_classes(product)
        self.assertEqual(conjugacy.num_classes(), 49)
        self.assertEqual(int(conjugacy.sizes().sum()), 14400)
        self.assertTrue((14400 % conjugacy.sizes() == 0).all())

    def test_class_constants(self):
        z2 = GroupFactory.from_catalog('Z2')
        constants = class_constants(z2, conjugacy_classes(z2))
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    self.assertEqual(constants(i, j, k),
                                     1 if (i + j) % 2 == k else 0)

        s3 = GroupFactory.from_catalog('S3')
        conjugacy = conjugacy_classes(s3)
        constants = class_constants(s3, conjugacy)
        t = _class_with_size(conjugacy, 3)[0]
        c = _class_with_size(conjugacy, 2)[0]
        self.assertEqual(constants(t, t, 0), 3)
        self.assertEqual(constants(t, t, c), 3)
        self.assertEqual(constants(t, t, t), 0)
        self.assertEqual(constants(c, c, 0), 2)
        self.assertEqual(
            constants.size_identity_residual(conjugacy.sizes()), 0)
        self.assertEqual(constants.matrix(t).shape, (3, 3))

        for name in ['Q8', 'A5', 'S3xZ2']:
            group = GroupFactory.from_catalog(name)
            conjugacy = conjugacy_classes(group)
            constants = class_constants(group, conjugacy)
            self.assertEqual(
                constants.size_identity_residual(conjugacy.sizes()), 0)

        with self.assertRaises(ZAFAException):
            class_constants(GroupFactory.from_catalog('Z3'), conjugacy)

    def test_quotient_group(self):
        s3 = GroupFactory.from_catalog('S3')
        conjugacy = conjugacy_classes(s3)
        a3 = [0] + list(conjugacy.classes()[_class_with_size(conjugacy,
                                                             2)[0]])
        self.assertEqual(list(verify_normal_subgroup(s3, a3)), sorted(a3))

        quotient, coset_of = quotient_group(s3, a3)
        self.assertEqual(quotient.order(), 2)
        self.assertEqual(coset_of[0], 0)
        for x in a3:
            self.assertEqual(coset_of[x], 0)
        for a in range(6):
            for b in range(6):
                self.assertEqual(coset_of[s3.multiply(a, b)],
                                 quotient.multiply(coset_of[a], coset_of[b]))

        with self.assertRaisesRegex(ZAFAException,
                                    'invalid normal subgroup'):
            verify_normal_subgroup(s3, [1])
        transposition = conjugacy.classes()[_class_with_size(conjugacy,
                                                             3)[0]][0]
        with self.assertRaisesRegex(ZAFAException,
                                    'invalid normal subgroup'):
            verify_normal_subgroup(s3, [0, transposition])
        with self.assertRaisesRegex(ZAFAException,
                                    'invalid normal subgroup'):
            verify_normal_subgroup(s3, [0, 17])


if __name__ == '__main__':
    unittest.main()
