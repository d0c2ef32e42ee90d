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

COLUMN_PADDING = 2
LIST_SEPARATOR = ';'


def format_cell(value):
    """
    Renders one report value as table text.
    Lists are joined with ';', complex numbers
    as [re, im] pairs, floats by repr so the text
    round-trips.
    """

    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return LIST_SEPARATOR.join(format_cell(v) for v in value)
    if isinstance(value, dict):
        return LIST_SEPARATOR.join(f"{k}={format_cell(value[k])}"
                                   for k in sorted(value))
    return str(value)


class OutputTable:
    """
    A table of report rows with named columns,
    rendered padded for terminals or as CSV
    """

    column_padding = COLUMN_PADDING

    def __init__(self, headers):
        """
        Parameters
        ----------
        headers : list of str
            Names of the columns of this table
        """

        self._headers = headers[:]
        self._rows = []
        self._column_widths = [
            len(header) + self.column_padding for header in headers
        ]

    @staticmethod
    def from_records(rows, headers=None):
        """
        Builds a table from report rows (dicts).
        Columns default to the union of the row
        keys in first-seen order; missing cells
        are left empty.
        """

        if headers is None:
            headers = []
            for row in rows:
                for key in row:
                    if key not in headers:
                        headers.append(key)
        table = OutputTable(headers)
        for row in rows:
            table.add_row([row.get(h) for h in headers])
        return table

    def headers(self):
        return self._headers

    def column_widths(self):
        return self._column_widths

    def add_row(self, row):
        """
        Adds a row of raw values; cells are
        formatted on insertion.

        Raises
        ------
        ZAFAException
            If the row length does not match the headers
        """

        if len(row) != len(self._headers):
            raise ZAFAException(
                "Must provide a value for each existing column when adding a new row."
            )
        cells = [format_cell(value) for value in row]
        self._rows.append(cells)
        for i, cell in enumerate(cells):
            self._column_widths[i] = max(
                len(cell) + self.column_padding, self._column_widths[i])

    def get_row(self, index):
        if index < 0 or index >= len(self._rows):
            raise ZAFAException(f"Index {index} out of range for get_row")
        return self._rows[index]

    def num_rows(self):
        return len(self._rows)

    def to_formatted_string(self, separator='', ignore_widths=False):
        """
        Converts the table into its string representation

        Parameters
        ----------
        separator : str
            The string that will separate columns of a row
        ignore_widths : bool
            Each cell is as wide as its content, and cells
            holding the separator or quotes are quoted.
            Use with separator=',' for CSV.

        Returns
        -------
        str
            The formatted table, one line per row
        """

        return '\n'.join(
            self._row_to_string(row, separator, ignore_widths)
            for row in [self._headers] + self._rows)

    def _row_to_string(self, row, separator, ignore_widths):
        if ignore_widths:
            return separator.join(
                self._quote(cell, separator) for cell in row)
        return separator.join(
            cell.ljust(self._column_widths[j]) for j, cell in enumerate(row))

    @staticmethod
    def _quote(cell, separator):
        if separator and (separator in cell or '"' in cell):
            return '"' + cell.replace('"', '""') + '"'
        return cell
