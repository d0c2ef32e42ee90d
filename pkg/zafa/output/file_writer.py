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

import os
from contextlib import suppress

from .output_writer import OutputWriter
from zafa.zafa_exceptions import ZAFAException


class FileWriter(OutputWriter):
    """
    Writes reports to a file or stdout. File
    output goes to a temporary sibling first and
    is renamed into place, so a failed write never
    leaves a partial report behind.
    """

    def __init__(self, filename=None):
        """
        Parameters
        ----------
        filename : str
            The full path to the file to write the output to.
            Writes to stdout if filename is None
        """

        self._filename = filename

    def write(self, out):
        """
        Writes the output to a file or stdout

        Parameters
        ----------
        out : str
            The string to be written to the
            file or stdout

        Raises
        ------
        ZAFAException
            If there is an error or exception while writing
            the output.
        """

        if self._filename:
            partial = self._filename + '.partial'
            try:
                directory = os.path.dirname(self._filename)
                if directory:
                    os.makedirs(directory, exist_ok=True)
                with open(partial, 'w') as f:
                    f.write(out)
                os.replace(partial, self._filename)
            except OSError as e:
                with suppress(OSError):
                    os.remove(partial)
                raise ZAFAException(e)
        else:
            print(out, end='')
