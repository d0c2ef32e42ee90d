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

import hashlib

import numpy as np

from zafa.zafa_exceptions import ZAFAException
from zafa.character.character_table import CharacterTable
from .central_element import CentralElement

CONVENTIONS = ('exchanged', 'direct')


def kronecker_table(first, second):
    """
    The character table of G x H assembled from
    the factors. Class (i, j) has index i*k_H + j
    and the row chi_pi x chi_pi' has index
    pi*k_H + pi'.

    Parameters
    ----------
    first, second : CharacterTable

    Returns
    -------
    CharacterTable
    """

    signature = f"kron({first.digest()};{second.digest()})"
    return CharacterTable(
        label=f"{first.label()}x{second.label()}",
        group_order=first.group_order() * second.group_order(),
        class_sizes=np.kron(first.class_sizes(), second.class_sizes()),
        degrees=np.kron(first.degrees(), second.degrees()),
        values=np.kron(first.values(), second.values()),
        digest=hashlib.sha256(signature.encode('utf-8')).hexdigest()[:16])


class DiagonalElement:
    """
    The indicator of the diagonal classes
    sum_C 1_{C x C} as an element of ZA(G x G).

    In the "exchanged" convention coeffs[pi, pi']
    multiplies conj(chi_pi) x chi_pi'; in the
    "direct" convention it multiplies chi_pi x chi_pi'.
    """

    def __init__(self, table, coeffs, convention='exchanged'):
        if convention not in CONVENTIONS:
            raise ZAFAException(
                f"Unknown diagonal convention '{convention}'")
        self._table = table
        self._coeffs = coeffs
        self._convention = convention

    def table(self):
        return self._table

    def coeffs(self):
        return self._coeffs

    def convention(self):
        return self._convention

    def za_norm(self):
        """
        The ZA(G x G) norm
        sum d_pi d_pi' |coeffs[pi, pi']|
        """

        degrees = self._table.degrees().astype(np.float64)
        return float((np.outer(degrees, degrees) * np.abs(self._coeffs)).sum())

    def in_convention(self, convention):
        """
        Returns the same element with coefficients
        re-indexed for the other convention
        """

        if convention == self._convention:
            return self
        conjugates = self._table.conjugate_rows()
        return DiagonalElement(self._table, self._coeffs[conjugates],
                               convention)

    def class_values(self):
        """
        Returns
        -------
        numpy.ndarray
            E[a, b], the value of the element on the
            class pair (C_a, C_b)
        """

        values = self._table.values()
        left = values.conj() if self._convention == 'exchanged' else values
        return left.T @ self._coeffs @ values

    def evaluate(self, a, b):
        """
        Value at the class pair (C_a, C_b): one on
        the diagonal, zero off it
        """

        return complex(self.class_values()[a, b])

    def idempotence_residual(self):
        values = self.class_values()
        return float(np.abs(values * values - values).max())

    def indicator_residual(self):
        values = self.class_values()
        return float(np.abs(values - np.eye(self._table.k())).max())

    def as_central_element(self, product_table=None):
        """
        Parameters
        ----------
        product_table : CharacterTable
            kronecker_table(table, table), built when
            not given

        Returns
        -------
        CentralElement
            The same element on the Kronecker table
            of G x G
        """

        if product_table is None:
            product_table = kronecker_table(self._table, self._table)
        k = self._table.k()
        rows = np.arange(k)
        if self._convention == 'exchanged':
            rows = self._table.conjugate_rows()
        coeffs = np.zeros(k * k, dtype=np.complex128)
        indices = (rows[:, None] * k + np.arange(k)[None, :]).reshape(-1)
        coeffs[indices] = self._coeffs.reshape(-1)
        return CentralElement(product_table, coeffs)


def diagonal_element(table, convention='exchanged'):
    """
    Coefficients
    (1/|G|^2) sum_C |C|^2 chi_pi(C) conj(chi_pi'(C))
    on conj(chi_pi) x chi_pi'.

    Parameters
    ----------
    table : CharacterTable
    convention : str
        'exchanged' (default) or 'direct'

    Returns
    -------
    DiagonalElement
    """

    values = table.values()
    weights = table.class_sizes().astype(np.float64)**2
    coeffs = (values * weights) @ values.conj().T / float(
        table.group_order())**2
    return DiagonalElement(table, coeffs).in_convention(convention)
