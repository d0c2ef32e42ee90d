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

import math
import unittest

import numpy as np

from zafa.verify.verify_suite import verify_suite, SuiteResult
from zafa.record.residuals import (OrthogonalityResidual, FusionResidual,
                                   ProductLawResidual, DerivationResidual,
                                   HypergroupResidual,
                                   NormalizationResidual)
from zafa.character.character_table import compute_character_table
import test_result_collector as trc


def _corrupt(table):
    values = table.values().copy()
    values[-1, -1] += 1e-3
    return table.with_values(values)


class TestVerifySuiteMethods(trc.TestResultCollector):
    def test_small_catalog(self):
        result = verify_suite(['Z4', 'S3', 'Q8'])
        self.assertTrue(result.passed(),
                        msg=[r.to_row() for r in result.failures()])
        self.assertEqual(result.failures(), [])
        self.assertLess(result.max_residual(), 1e-6)

        subjects = {record.subject() for record in result.records()}
        for subject in [
                'Z4', 'S3', 'Q8', 'S3xZ2', 'dual(Q8)', 'conj(S3)', 'SU(2)',
                'SO(3)', 'poly-n0', 'Z/{+-1}', 'Z2/C4', 'Z/{+-1} vs poly-n0'
        ]:
            self.assertIn(subject, subjects)

        aggregator = result.aggregator()
        self.assertEqual(aggregator.total(OrthogonalityResidual), 3)
        self.assertEqual(aggregator.total(ProductLawResidual), 3)
        self.assertEqual(aggregator.total(DerivationResidual), 2)

        summary = result.summary_table()
        self.assertEqual(summary.headers()[0], 'Check')
        self.assertEqual(summary.num_rows(),
                         len(aggregator.record_types()))
        self.assertEqual(summary.get_row(0)[0], 'Orthogonality')

    def test_corrupted_table(self):
        result = verify_suite(['S3'], table_hook=_corrupt)
        self.assertFalse(result.passed())
        failed = {type(record) for record in result.failures()}
        self.assertIn(OrthogonalityResidual, failed)
        for record in result.failures():
            self.assertGreater(record.value(), record.threshold)

        rows = result.to_rows()
        orthogonality = [
            row for row in rows if row['check'] == 'Orthogonality'
        ]
        self.assertEqual(len(orthogonality), 1)
        self.assertFalse(orthogonality[0]['passed'])

        # the dual hypergroup cannot be built from a non-integral fusion
        dual = [
            record for record in result.records()
            if record.subject() == 'dual(S3)'
        ]
        self.assertEqual(len(dual), 2)
        for record in dual:
            self.assertTrue(math.isinf(record.value()))
        self.assertIn(NormalizationResidual, {type(r) for r in dual})
        self.assertIn('conj(S3)',
                      {record.subject() for record in result.records()})

    def test_empty_catalog(self):
        result = verify_suite([])
        self.assertEqual(result.total(), 0)
        self.assertTrue(result.passed())
        self.assertEqual(result.max_residual(), 0.0)
        self.assertEqual(result.to_rows(), [])

    def test_unknown_group(self):
        result = verify_suite(['Z3', 'nope'], workers=2)
        failures = result.failures()
        self.assertEqual(len(failures), 1)
        self.assertEqual(failures[0].subject(), 'nope')
        self.assertTrue(math.isinf(failures[0].value()))

    def test_unexpected_exception(self):

        def table_fn(group):
            if group.label() == 'S3':
                raise np.linalg.LinAlgError('eigenvalues did not converge')
            return compute_character_table(group)

        result = verify_suite(['Z3', 'S3'], table_fn=table_fn)
        failures = result.failures()
        self.assertEqual(len(failures), 1)
        self.assertEqual(failures[0].subject(), 'S3')
        self.assertTrue(math.isinf(failures[0].value()))

        def broken_hook(table):
            raise ValueError('bad table')

        result = verify_suite(['Z3'], table_hook=broken_hook)
        self.assertEqual([r.subject() for r in result.failures()], ['Z3'])

    def test_suite_result(self):
        result = SuiteResult([
            FusionResidual(0, 'A5'),
            HypergroupResidual(1e-3, 'dual(A5)'),
            HypergroupResidual(0, 'conj(A5)')
        ])
        self.assertEqual(result.total(), 3)
        self.assertFalse(result.passed())
        self.assertEqual([r.subject() for r in result.failures()],
                         ['dual(A5)'])
        self.assertEqual(result.max_residual(), 1e-3)
        summary = result.summary_table()
        self.assertEqual(summary.get_row(1),
                         ['Hypergroup Axioms', '2', '0.001', '1e-10', 'false'])


if __name__ == '__main__':
    unittest.main()
