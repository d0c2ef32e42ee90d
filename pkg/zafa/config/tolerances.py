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

from zafa.zafa_exceptions import ZAFAException


class Tolerances:
    """
    A config class holding the numerical tolerances
    used across the engine. Every key has a module
    default and may be overridden from the CLI.
    """

    def __init__(self, **overrides):
        self._values = {
            # orthogonality residual accepted for a character table
            'orthogonality': 1e-8,
            # distance to the nearest integer for degrees and multiplicities
            'integrality': 1e-6,
            # transform round trips and algebra identities
            'round-trip': 1e-9,
            # smallest relative eigenvalue gap of the random combination
            'cluster': 1e-4,
            # distance from the unit circle
            'circle': 1e-12,
        }
        for key, value in overrides.items():
            self[key.replace('_', '-')] = value

    def __getitem__(self, key):
        """
        Parameters
        ----------
        key : str
            Name of the tolerance

        Returns
        -------
        float

        Raises
        ------
        ZAFAException
            If the tolerance is not defined
        """

        if key not in self._values:
            raise ZAFAException(f"'{key}' is not a known tolerance")
        return self._values[key]

    def __setitem__(self, key, value):
        """
        Raises
        ------
        ZAFAException
            For unknown keys or non-positive values
        """

        if key not in self._values:
            raise ZAFAException(f"'{key}' is not a known tolerance")
        value = float(value)
        if not value > 0:
            raise ZAFAException(f"Tolerance '{key}' must be positive")
        self._values[key] = value

    def to_dict(self):
        return dict(self._values)


DEFAULT_TOLERANCES = Tolerances()
