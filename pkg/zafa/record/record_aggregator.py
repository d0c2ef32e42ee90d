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

from collections import defaultdict

from zafa.record.record import Record
from zafa.zafa_exceptions import ZAFAException


class RecordAggregator:
    """
    Residual records of a run grouped by check
    type, in insertion order within each type
    """

    def __init__(self, records=()):
        self._records = defaultdict(list)
        for record in records:
            self.insert(record)

    def insert(self, record):
        """
        Parameters
        ----------
        record : Record

        Raises
        ------
        ZAFAException
            If record is not a Record
        """

        if not isinstance(record, Record):
            raise ZAFAException("Can only aggregate Record objects, got "
                                f"{type(record).__name__}")
        self._records[type(record)].append(record)

    def _check_types(self, record_types):
        for record_type in record_types:
            if record_type not in self._records:
                raise ZAFAException(
                    f"No '{record_type.header()}' records in this aggregator")

    def record_types(self):
        """
        Returns
        -------
        list of types
            Record types in the order they first
            appeared
        """

        return list(self._records)

    def total(self, record_type=None):
        """
        Number of records of one type, or of all
        types when record_type is None
        """

        if record_type is None:
            return sum(len(records) for records in self._records.values())
        self._check_types([record_type])
        return len(self._records[record_type])

    def filter_records(self, record_types=None, predicate=None):
        """
        Parameters
        ----------
        record_types : list of types
            Types to return, every type when None
        predicate : callable
            Keeps the records for which
            predicate(record) is true; all
            records when None

        Returns
        -------
        dict
            record type -> list of records

        Raises
        ------
        ZAFAException
            If a requested type has no records
        """

        if record_types is None:
            record_types = self.record_types()
        else:
            self._check_types(record_types)
        return {
            record_type: [
                record for record in self._records[record_type]
                if predicate is None or predicate(record)
            ] for record_type in record_types
        }

    def failures(self, record_types=None):
        """
        Records above the threshold of their type
        """

        return self.filter_records(record_types,
                                   lambda record: not record.passed())

    def aggregate(self, record_types=None, reduce_func=max):
        """
        Reduces the values of each record type,
        the largest residual by default.

        Returns
        -------
        dict
            record type -> reduced value
        """

        return {
            record_type: reduce_func([record.value() for record in records])
            for record_type, records in self.filter_records(
                record_types).items()
        }
