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

import json

from .output_table import OutputTable
from zafa.zafa_exceptions import ZAFAException

SCHEMA = 'zafa-report'
SCHEMA_VERSION = 1
FORMATS = ('json', 'csv')


class ReportDocument:
    """
    The single document written by a run: a
    versioned header and one row per group (or
    instance) and task. JSON is canonical, CSV is
    a projection of the rows.
    """

    def __init__(self, tasks, tool_version):
        self._tasks = list(tasks)
        self._tool_version = tool_version
        self._rows = []

    def add_rows(self, rows):
        self._rows.extend(rows)

    def rows(self):
        return self._rows

    def failed(self):
        return any(row.get('status') == 'error' for row in self._rows)

    def to_json(self):
        document = {
            'schema': SCHEMA,
            'schema_version': SCHEMA_VERSION,
            'tool_version': self._tool_version,
            'tasks': self._tasks,
            'rows': self._rows,
        }
        return json.dumps(document, sort_keys=True, indent=2) + '\n'

    def to_csv(self):
        table = OutputTable.from_records(self._rows)
        return table.to_formatted_string(separator=',',
                                         ignore_widths=True) + '\n'

    def render(self, fmt):
        """
        Parameters
        ----------
        fmt : str
            'json' or 'csv'

        Returns
        -------
        str

        Raises
        ------
        ZAFAException
            For an unknown format
        """

        if fmt == 'json':
            return self.to_json()
        if fmt == 'csv':
            return self.to_csv()
        raise ZAFAException(f"Unknown report format '{fmt}'")


def complex_pair(value):
    """
    [re, im] form used for complex numbers
    in every JSON document
    """

    value = complex(value)
    return [float(value.real), float(value.imag)]
