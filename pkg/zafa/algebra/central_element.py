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

import numpy as np

from zafa.zafa_exceptions import ZAFAException


def check_same_table(first, second):
    """
    Raises
    ------
    ZAFAException
        "mismatched tables" if the two tables do
        not describe the same group
    """

    if first is second:
        return
    if first.digest() != second.digest() or first.k() != second.k():
        raise ZAFAException(
            f"mismatched tables: {first.label()} and {second.label()}")


class CentralElement:
    """
    An element sum_pi alpha_pi chi_pi of ZA(G),
    stored as the dense coefficient vector over
    the rows of its character table
    """

    def __init__(self, table, coeffs):
        """
        Parameters
        ----------
        table : CharacterTable
            The ambient table
        coeffs : array-like of complex
            alpha_pi for every row of the table
        """

        coeffs = np.asarray(coeffs, dtype=np.complex128)
        if coeffs.shape != (table.k(), ):
            raise ZAFAException(
                f"Expected {table.k()} coefficients for {table.label()}, "
                f"got shape {coeffs.shape}")
        self._table = table
        self._coeffs = coeffs

    @staticmethod
    def zero(table):
        return CentralElement(table, np.zeros(table.k()))

    @staticmethod
    def character(table, row):
        """
        Returns
        -------
        CentralElement
            chi_row itself
        """

        coeffs = np.zeros(table.k(), dtype=np.complex128)
        coeffs[row] = 1.0
        return CentralElement(table, coeffs)

    def table(self):
        return self._table

    def coeffs(self):
        return self._coeffs

    def support(self):
        return [int(pi) for pi in np.flatnonzero(self._coeffs)]

    def is_zero(self):
        return not self._coeffs.any()

    def __add__(self, other):
        check_same_table(self._table, other.table())
        return CentralElement(self._table, self._coeffs + other.coeffs())

    def __sub__(self, other):
        check_same_table(self._table, other.table())
        return CentralElement(self._table, self._coeffs - other.coeffs())

    def scale(self, factor):
        return CentralElement(self._table, factor * self._coeffs)

    def to_document(self):
        """
        Returns
        -------
        dict
            {"group": digest, "coeffs": {"pi": [re, im]}}
            listing the non-zero coefficients
        """

        return {
            'group': self._table.digest(),
            'coeffs': {
                str(pi): [float(self._coeffs[pi].real),
                          float(self._coeffs[pi].imag)]
                for pi in self.support()
            }
        }

    @staticmethod
    def from_document(document, table):
        """
        Raises
        ------
        ZAFAException
            If the document belongs to another
            group or is malformed
        """

        try:
            if document['group'] != table.digest():
                raise ZAFAException(
                    f"mismatched tables: element of group {document['group']} "
                    f"read against {table.label()}")
            coeffs = np.zeros(table.k(), dtype=np.complex128)
            for pi, (re, im) in document['coeffs'].items():
                coeffs[int(pi)] = complex(re, im)
        except (KeyError, TypeError, ValueError, IndexError) as e:
            raise ZAFAException(f"Malformed central element document: {e}")
        return CentralElement(table, coeffs)

    def __repr__(self):
        return (f"CentralElement({self._table.label()}, "
                f"support={self.support()})")


def za_norm(u):
    """
    The norm of ZA(G): sum_pi d_pi |alpha_pi|

    Parameters
    ----------
    u : CentralElement

    Returns
    -------
    float
    """

    return float((u.table().degrees() * np.abs(u.coeffs())).sum())
