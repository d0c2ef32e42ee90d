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

from abc import ABC, abstractmethod

from zafa.zafa_exceptions import ZAFAException


class Record(ABC):
    """
    A scalar result measured on one subject,
    a group label or a hypergroup name
    """

    def __init__(self, value, subject):
        """
        Parameters
        ----------
        value : float or int
            The measured value
        subject : str
            What the value was measured on
        """

        try:
            self._value = float(value)
        except (TypeError, ValueError):
            raise ZAFAException(
                f"Record values must be numeric, got {value!r}")
        self._subject = subject

    @staticmethod
    @abstractmethod
    def header():
        """
        Returns
        -------
        str
            The full name of the
            measured quantity.
        """

    def value(self):
        return self._value

    def subject(self):
        return self._subject
