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

import json
import os
import tempfile
import unittest
from unittest.mock import patch

import numpy as np

from .mocks.mock_io import MockIOMethods

from zafa.cli.cli import CLI
from zafa.config.run_config import RunConfig
from zafa.runner import Runner
from zafa import entrypoint
from zafa.output.report_document import ReportDocument
from zafa.zafa_exceptions import ZAFAException
import test_result_collector as trc


class TestRunnerMethods(trc.TestResultCollector):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.cache_dir = os.path.join(self._tmp.name, 'cache')

    def _config(self, tasks, catalog=None, specs=None, **entries):
        config = RunConfig()
        config['tasks'] = tasks
        config['catalog'] = catalog or []
        config['specs'] = specs or []
        config['cache-dir'] = self.cache_dir
        for key, value in entries.items():
            config[key.replace('_', '-')] = value
        config.validate()
        return config

    def _write_spec(self, name, content):
        path = os.path.join(self._tmp.name, name)
        with open(path, 'w') as f:
            json.dump(content, f)
        return path

    def test_am_task(self):
        runner = Runner(self._config(['am'], ['Z6', 'S3', 'Q8']), '0.1.0')
        subjects = runner.prepare()
        self.assertEqual([s.name() for s in subjects], ['Z6', 'S3', 'Q8'])

        document = runner.run(subjects)
        rows = document.rows()
        self.assertFalse(document.failed())
        self.assertEqual([row['subject'] for row in rows], ['Z6', 'S3', 'Q8'])
        for row, expected in zip(rows, [1, 7 / 3, 7 / 4]):
            self.assertEqual(row['status'], 'ok')
            self.assertEqual(row['task'], 'am')
            self.assertAlmostEqual(row['am_za'], expected)
            self.assertAlmostEqual(row['am_zl1'], expected)
            self.assertTrue(row['lower_bound_check'])
            self.assertNotIn('wall_time', row)

    def test_cached_tables_give_identical_reports(self):
        config = self._config(['table', 'fusion'], ['S3', 'A4'])
        first = Runner(config, '0.1.0')
        first_json = first.run(first.prepare()).to_json()
        self.assertTrue(os.listdir(self.cache_dir))

        second = Runner(config, '0.1.0')
        second_json = second.run(second.prepare()).to_json()
        self.assertEqual(first_json, second_json)

        document = json.loads(first_json)
        self.assertEqual(document['schema'], 'zafa-report')
        self.assertEqual(document['tasks'], ['table', 'fusion'])
        table_row = document['rows'][0]
        self.assertEqual(table_row['degrees'], [1, 1, 2])
        self.assertEqual(table_row['values'][2][0], 2.0)
        fusion_row = document['rows'][1]
        self.assertEqual(fusion_row['dimension_residual'], 0)
        self.assertEqual(len(fusion_row['products']), 6)
        self.assertEqual(fusion_row['products'][-1], {
            'pair': [2, 2],
            'constituents': [[0, 1], [1, 1], [2, 1]]
        })
        # A4 has complex characters, reported as [re, im] pairs
        a4_values = document['rows'][2]['values']
        self.assertTrue(any(isinstance(v, list) for row in a4_values
                            for v in row))

    def test_spec_documents(self):
        path = self._write_spec('specs.json', [{
            'kind': 'poly-n0'
        }, {
            'catalog': 'Z3'
        }, {
            'kind': 'dual',
            'group': 'S3'
        }])
        runner = Runner(
            self._config(['hypergroup-check', 'am'], specs=[path],
                         timings=True), '0.1.0')
        subjects = runner.prepare()
        self.assertEqual([s.name() for s in subjects],
                         ['poly-n0', 'Z3', 'dual(S3)'])
        self.assertIsNone(subjects[0].group())

        rows = runner.run(subjects).rows()
        self.assertEqual([(row['subject'], row['task']) for row in rows],
                         [('poly-n0', 'hypergroup-check'),
                          ('Z3', 'hypergroup-check'),
                          ('Z3', 'hypergroup-check'), ('Z3', 'am'),
                          ('dual(S3)', 'hypergroup-check')])
        self.assertEqual([row.get('hypergroup') for row in rows[1:3]],
                         ['dual(Z3)', 'conj(Z3)'])
        for row in rows:
            self.assertEqual(row['status'], 'ok')
            self.assertIn('wall_time', row)
            if row['task'] == 'hypergroup-check':
                self.assertLess(row['associativity'], 1e-10)

    def test_su2_task(self):
        runner = Runner(self._config(['su2-deriv'], max_level=3, points=2),
                        '0.1.0')
        document = runner.run(runner.prepare())
        rows = document.rows()
        self.assertEqual(len(rows), 8)
        self.assertEqual({row['subject'] for row in rows}, {'SU(2)'})
        self.assertEqual([row['l'] for row in rows[:4]], [0, 1, 2, 3])
        for row in rows:
            self.assertGreaterEqual(row['slack'], 0)
        csv = document.render('csv')
        self.assertTrue(csv.startswith('l,z,abs_derivation,bound,slack'))
        self.assertEqual(len(csv.strip().split('\n')), 9)

    def test_failed_task_rows(self):
        error = ZAFAException('degenerate spectrum for Z6')
        with patch('zafa.character.table_cache.compute_character_table',
                   side_effect=error):
            runner = Runner(self._config(['am'], ['Z6', 'S3']), '0.1.0')
            document = runner.run(runner.prepare())
        self.assertTrue(document.failed())
        for row in document.rows():
            self.assertEqual(row['status'], 'error')
            self.assertEqual(row['error'], 'degenerate spectrum for Z6')
            self.assertEqual(row['task'], 'am')

    def test_unexpected_task_error(self):
        error = np.linalg.LinAlgError('eigenvalues did not converge')
        with patch('zafa.character.table_cache.compute_character_table',
                   side_effect=error):
            runner = Runner(self._config(['am'], ['S3']), '0.1.0')
            document = runner.run(runner.prepare())
        self.assertTrue(document.failed())
        row = document.rows()[0]
        self.assertEqual(row['status'], 'error')
        self.assertEqual(row['error'],
                         'LinAlgError: eigenvalues did not converge')

    def test_malformed_spec(self):
        path = self._write_spec('bad.json', {'catalog': 'S3', 'product': []})
        runner = Runner(self._config(['am'], specs=[path]), '0.1.0')
        with self.assertRaises(ZAFAException):
            runner.prepare()

        runner = Runner(self._config(['am'], ['S99']), '0.1.0')
        with self.assertRaises(ZAFAException):
            runner.prepare()

    def test_report_document(self):
        document = ReportDocument(['am'], '0.1.0')
        document.add_rows([{'subject': 'S3', 'status': 'ok', 'am_za': 2.5}])
        self.assertFalse(document.failed())
        parsed = json.loads(document.render('json'))
        self.assertEqual(parsed['schema_version'], 1)
        self.assertEqual(parsed['tool_version'], '0.1.0')
        self.assertEqual(document.render('csv'),
                         'subject,status,am_za\nS3,ok,2.5\n')
        with self.assertRaises(ZAFAException):
            document.render('yaml')

    def tearDown(self):
        self._tmp.cleanup()


class TestEntrypointMethods(trc.TestResultCollector):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.cache_dir = os.path.join(self._tmp.name, 'cache')
        self.out = os.path.join(self._tmp.name, 'reports', 'report.json')

    def test_run(self):
        args = CLI().parse([
            'run', '--catalog', 'S3,Z4', '--task', 'am', '--out', self.out,
            '--cache-dir', self.cache_dir
        ])
        self.assertEqual(entrypoint.run(args), entrypoint.EXIT_SUCCESS)
        with open(self.out, 'r') as f:
            document = json.load(f)
        self.assertEqual([row['subject'] for row in document['rows']],
                         ['S3', 'Z4'])

        with patch('zafa.character.table_cache.compute_character_table',
                   side_effect=ZAFAException('degenerate spectrum')):
            args = CLI().parse([
                'run', '--catalog', 'S3', '--task', 'am', '--out', self.out,
                '--cache-dir',
                os.path.join(self._tmp.name, 'empty')
            ])
            self.assertEqual(entrypoint.run(args), entrypoint.EXIT_FAILURES)

    def test_unwritable_cache_and_output(self):
        blocker = os.path.join(self._tmp.name, 'blocker')
        with open(blocker, 'w') as f:
            f.write('not a directory')

        # tables that cannot be cached are still reported
        args = CLI().parse([
            'run', '--catalog', 'S3', '--task', 'am', '--out', self.out,
            '--cache-dir',
            os.path.join(blocker, 'cache')
        ])
        self.assertEqual(entrypoint.run(args), entrypoint.EXIT_SUCCESS)
        with open(self.out, 'r') as f:
            row = json.load(f)['rows'][0]
        self.assertEqual(row['status'], 'ok')
        self.assertAlmostEqual(row['am_za'], 7 / 3)

        out = os.path.join(blocker, 'report.json')
        argv = [
            'zafa', 'run', '--catalog', 'S3', '--task', 'am', '--out', out,
            '--cache-dir', self.cache_dir
        ]
        with patch('zafa.entrypoint.signal'), patch.object(sys, 'argv', argv):
            with self.assertRaises(SystemExit) as context:
                entrypoint.main()
        self.assertEqual(context.exception.code, entrypoint.EXIT_ERROR)
        self.assertFalse(os.path.exists(out + '.partial'))

    def test_verify(self):
        with MockIOMethods() as io_mock:
            args = CLI().parse([
                'verify', '--catalog', 'Z2,S3', '--cache-dir', self.cache_dir
            ])
            self.assertEqual(entrypoint.verify(args),
                             entrypoint.EXIT_SUCCESS)
            printed = io_mock.print_mock.call_args[0][0]
            self.assertTrue(printed.startswith('Check'))
            self.assertIn('Orthogonality', printed)

    def test_main_exit_codes(self):
        bad = os.path.join(self._tmp.name, 'bad.json')
        with open(bad, 'w') as f:
            f.write('[{"permutation": {"degree": 3}}]')
        argv = [
            'zafa', 'run', '--spec', bad, '--task', 'am', '--out', self.out,
            '--cache-dir', self.cache_dir
        ]
        with patch('zafa.entrypoint.signal'), patch.object(sys, 'argv', argv):
            with self.assertRaises(SystemExit) as context:
                entrypoint.main()
        self.assertEqual(context.exception.code, entrypoint.EXIT_ERROR)
        self.assertFalse(os.path.exists(self.out))

        argv = ['zafa', 'run', '--task', 'am', '--workers', '0']
        with patch('zafa.entrypoint.signal'), patch.object(sys, 'argv', argv):
            with self.assertRaises(SystemExit) as context:
                entrypoint.main()
        self.assertEqual(context.exception.code, entrypoint.EXIT_ERROR)

    def tearDown(self):
        self._tmp.cleanup()


if __name__ == '__main__':
    unittest.main()
