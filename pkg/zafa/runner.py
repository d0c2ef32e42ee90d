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

import logging
import time
from functools import partial
from multiprocessing.pool import ThreadPool

from zafa.zafa_exceptions import ZAFAException
from .group.group_factory import GroupFactory
from .character.table_cache import TableCache
from .character.character_table import verify_table
from .algebra.fusion import fusion_tensor
from .amenability.report import amenability_report
from .hypergroup.hypergroup_factory import HypergroupFactory
from .hypergroup.convolution import verify_axioms
from .su2.characters import circle_grid
from .su2.derivation import bound_sweep
from .output.report_document import ReportDocument, complex_pair

logger = logging.getLogger(__name__)

GROUP_TASKS = ('table', 'am', 'fusion')

# Indices checked on hypergroups without a finite index set
INFINITE_HYPERGROUP_LIMIT = 50

# Finite hypergroups are checked on all indices up to this many
FINITE_HYPERGROUP_LIMIT = 1000

# Imaginary parts below this are dropped from reported values
REAL_CUTOFF = 1e-10

# Smallest Im z of the SU(2) sweep grid
SWEEP_MIN_IMAG = 0.1


class Subject:
    """
    One input of a run: a group or a hypergroup
    """

    def __init__(self, name, group=None, hypergroup=None):
        self._name = name
        self._group = group
        self._hypergroup = hypergroup

    def name(self):
        return self._name

    def group(self):
        return self._group

    def hypergroup(self):
        return self._hypergroup


def _report_value(value):
    if abs(value.imag) < REAL_CUTOFF:
        return float(value.real)
    return complex_pair(value)


class Runner:
    """
    Coordinates a batch run: builds every subject
    up front, runs the requested tasks on worker
    threads and collects the rows of the report
    in input order.
    """

    def __init__(self, config, tool_version):
        """
        Parameters
        ----------
        config : RunConfig
            A validated run config
        tool_version : str
            Written into the report header
        """

        self._config = config
        self._tool_version = tool_version
        self._cache = TableCache(config['cache-dir'])
        self._tasks = {
            'table': self._table_task,
            'am': self._am_task,
            'fusion': self._fusion_task,
            'hypergroup-check': self._hypergroup_task,
        }

    def prepare(self):
        """
        Builds the groups and hypergroups named by
        the catalog list and the spec files

        Returns
        -------
        list of Subject

        Raises
        ------
        ZAFAException
            For unreadable or malformed specs
        """

        subjects = [
            Subject(name, group=GroupFactory.from_catalog(name))
            for name in self._config['catalog']
        ]
        for document in self._config.documents():
            if isinstance(document, dict) and 'kind' in document:
                hypergroup = HypergroupFactory.from_spec(document,
                                                         table_fn=self._table)
                subjects.append(
                    Subject(hypergroup.name(), hypergroup=hypergroup))
            else:
                group = GroupFactory.from_spec(document)
                subjects.append(Subject(group.label(), group=group))
        logger.info(f"Prepared {len(subjects)} subjects")
        return subjects

    def run(self, subjects):
        """
        Parameters
        ----------
        subjects : list of Subject

        Returns
        -------
        ReportDocument
        """

        tasks = self._config['tasks']
        document = ReportDocument(tasks, self._tool_version)
        with ThreadPool(int(self._config['workers'])) as pool:
            per_subject = pool.map(partial(self._run_subject, tasks=tasks),
                                   subjects)
        for rows in per_subject:
            document.add_rows(rows)
        if 'su2-deriv' in tasks:
            document.add_rows(self._su2_rows())
        return document

    def _table(self, group):
        table, cached = self._cache.table_for(
            group,
            seed=self._config['seed'],
            tolerances=self._config['tolerance'])
        if cached:
            verify_table(table, self._config['tolerance'])
        return table

    def _run_subject(self, subject, tasks):
        rows = []
        for task in tasks:
            if task == 'su2-deriv':
                continue
            if task in GROUP_TASKS and subject.group() is None:
                logger.debug(f"Task {task} does not apply to {subject.name()}")
                continue
            logger.info(f"Running {task} on {subject.name()}")
            start = time.perf_counter()
            try:
                task_rows = self._tasks[task](subject)
                for row in task_rows:
                    row.update(status='ok')
            except ZAFAException as e:
                logger.error(f"Task {task} failed on {subject.name()}: {e}")
                task_rows = [{'status': 'error', 'error': str(e)}]
            except Exception as e:
                logger.exception(f"Task {task} raised {type(e).__name__} "
                                 f"on {subject.name()}: {e}")
                task_rows = [{
                    'status': 'error',
                    'error': f"{type(e).__name__}: {e}"
                }]
            elapsed = time.perf_counter() - start
            for row in task_rows:
                row.update(subject=subject.name(), task=task)
                if self._config['timings']:
                    row['wall_time'] = elapsed
            rows.extend(task_rows)
        return rows

    def _table_task(self, subject):
        table = self._table(subject.group())
        return [{
            'order': table.group_order(),
            'k': table.k(),
            'degrees': [int(d) for d in table.degrees()],
            'class_sizes': [int(s) for s in table.class_sizes()],
            'values': [[_report_value(v) for v in row]
                       for row in table.values()],
            'orthogonality_residual': table.orthogonality_residual(),
        }]

    def _am_task(self, subject):
        return [amenability_report(self._table(subject.group()),
                                   self._config['tolerance']).to_row()]

    def _fusion_task(self, subject):
        table = self._table(subject.group())
        tensor = fusion_tensor(table, self._config['tolerance'])
        k = table.k()
        return [{
            'order': table.group_order(),
            'k': k,
            'products': [{
                'pair': [pi, pi_prime],
                'constituents': [list(c) for c in tensor.constituents(
                    pi, pi_prime)],
            } for pi in range(k) for pi_prime in range(pi, k)],
            'dimension_residual': tensor.dimension_residual(
                table.degrees()),
        }]

    def _hypergroup_task(self, subject):
        if subject.hypergroup() is not None:
            hypergroups = [subject.hypergroup()]
        else:
            table = self._table(subject.group())
            hypergroups = [
                HypergroupFactory.create_dual(table),
                HypergroupFactory.create_class(subject.group())
            ]
        rows = []
        for hypergroup in hypergroups:
            limit = INFINITE_HYPERGROUP_LIMIT
            if hypergroup.is_finite():
                limit = FINITE_HYPERGROUP_LIMIT
            residuals = verify_axioms(hypergroup,
                                      limit=limit,
                                      seed=self._config['seed'])
            rows.append({'hypergroup': hypergroup.name(), **residuals})
        return rows

    def _su2_rows(self):
        start = time.perf_counter()
        points = circle_grid(int(self._config['points']),
                             min_imag=SWEEP_MIN_IMAG)
        rows = bound_sweep(range(int(self._config['max-level']) + 1), points)
        elapsed = time.perf_counter() - start
        for row in rows:
            row.update(subject='SU(2)', task='su2-deriv', status='ok')
            if self._config['timings']:
                row['wall_time'] = elapsed
        logger.info(f"SU(2) sweep produced {len(rows)} rows")
        return rows
