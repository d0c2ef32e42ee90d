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

from zafa.zafa_exceptions import ZAFAException
from .tolerances import Tolerances

TASKS = ('table', 'am', 'fusion', 'su2-deriv', 'hypergroup-check')
FORMATS = ('json', 'csv')


class RunConfig:
    """
    A config class holding everything a batch run
    needs. Keys are fixed; reading or writing an
    unknown key is an error.
    """

    def __init__(self):
        self._args = {
            # group-spec or hypergroup-spec files
            'specs': [],
            # catalog group names
            'catalog': [],
            'tasks': [],
            # report path, stdout when None
            'out': None,
            'format': 'json',
            'tolerance': Tolerances(),
            'cache-dir': None,
            'workers': 1,
            'seed': 0,
            'timings': False,
            # largest level of the SU(2) bound sweep
            'max-level': 200,
            # number of circle points of the SU(2) sweep
            'points': 100,
        }
        self._documents = None

    def __getitem__(self, key):
        """
        Parameters
        ----------
        key : str
            The name of the config entry

        Returns
        -------
            The value of the entry

        Raises
        ------
        ZAFAException
            If the key is not part of the config
        """

        if key not in self._args:
            raise ZAFAException(f"'{key}' Key not found in config")
        return self._args[key]

    def __setitem__(self, key, value):
        """
        Raises
        ------
        ZAFAException
            If the key is not part of the config
        """

        if key not in self._args:
            raise ZAFAException(
                f"The argument '{key}' is not supported by the run config.")
        self._args[key] = value

    def validate(self):
        """
        Rejects unknown tasks and formats and
        out-of-range numbers before anything runs

        Raises
        ------
        ZAFAException
        """

        if not self._args['tasks']:
            raise ZAFAException("At least one task is required")
        for task in self._args['tasks']:
            if task not in TASKS:
                raise ZAFAException(
                    f"Unknown task '{task}', expected one of "
                    f"{', '.join(TASKS)}")
        if self._args['format'] not in FORMATS:
            raise ZAFAException(
                f"Unknown format '{self._args['format']}', expected "
                f"json or csv")
        if int(self._args['workers']) < 1:
            raise ZAFAException("The number of workers must be positive")
        if int(self._args['max-level']) < 0 or int(self._args['points']) < 1:
            raise ZAFAException(
                "max-level must be non-negative and points positive")
        group_tasks = [t for t in self._args['tasks'] if t != 'su2-deriv']
        if group_tasks and not (self._args['specs'] or self._args['catalog']):
            raise ZAFAException(
                "Group tasks need a --spec file or a --catalog list")

    def documents(self):
        """
        Reads every spec file. A file holds one
        spec document or a list of them.

        Returns
        -------
        list of dict

        Raises
        ------
        ZAFAException
            If a file cannot be read or is not JSON
        """

        if self._documents is None:
            documents = []
            for path in self._args['specs']:
                try:
                    with open(path, 'r') as f:
                        content = json.load(f)
                except OSError as e:
                    raise ZAFAException(f"Cannot read spec file {path}: {e}")
                except ValueError as e:
                    raise ZAFAException(f"Malformed spec file {path}: {e}")
                if isinstance(content, list):
                    documents.extend(content)
                else:
                    documents.append(content)
            self._documents = documents
        return self._documents
