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
import logging
from functools import lru_cache

import numpy as np

from zafa.zafa_exceptions import ZAFAException
from zafa.config.tolerances import DEFAULT_TOLERANCES
from .central_element import CentralElement, check_same_table

logger = logging.getLogger(__name__)

# Fusion tensors kept in memory, least recently used evicted first
FUSION_CACHE_SIZE = 64


class FusionTensor:
    """
    Multiplicities m(pi, pi'; sigma) of chi_sigma
    in the pointwise product chi_pi chi_pi'
    """

    def __init__(self, multiplicities):
        """
        Parameters
        ----------
        multiplicities : numpy.ndarray
            k x k x k non-negative integers
        """

        self._multiplicities = multiplicities

    def multiplicities(self):
        return self._multiplicities

    def __call__(self, pi, pi_prime, sigma):
        return int(self._multiplicities[pi, pi_prime, sigma])

    def constituents(self, pi, pi_prime):
        """
        Returns
        -------
        list of (int, int)
            (sigma, multiplicity) for every sigma
            occurring in chi_pi chi_pi'
        """

        row = self._multiplicities[pi, pi_prime]
        return [(int(sigma), int(row[sigma]))
                for sigma in np.flatnonzero(row)]

    def dimension_residual(self, degrees):
        """
        Largest violation of
        sum_sigma m(pi,pi';sigma) d_sigma = d_pi d_pi'.
        Zero for a valid table.
        """

        lhs = self._multiplicities @ degrees
        return int(np.abs(lhs - np.outer(degrees, degrees)).max())

    def is_symmetric(self):
        return bool((self._multiplicities == self._multiplicities.transpose(
            1, 0, 2)).all())

    def convolution_coefficients(self, degrees):
        """
        Returns
        -------
        numpy.ndarray
            c[pi, pi', sigma] = m d_sigma / (d_pi d_pi'),
            the coefficient of delta_sigma in
            delta_pi * delta_pi'
        """

        degrees = degrees.astype(np.float64)
        return (self._multiplicities * degrees[None, None, :] /
                np.outer(degrees, degrees)[:, :, None])


class _TableKey:
    """
    Hashable handle on a character table,
    equal for tables with the same contents
    """

    def __init__(self, table):
        self.table = table
        self._key = (table.digest(),
                     hashlib.sha256(table.values().tobytes()).hexdigest())

    def __hash__(self):
        return hash(self._key)

    def __eq__(self, other):
        return isinstance(other, _TableKey) and self._key == other._key


@lru_cache(maxsize=FUSION_CACHE_SIZE)
def _compute_fusion(table_key, integrality):
    table = table_key.table
    values = table.values()
    weighted = values.conj() * table.class_sizes()
    raw = np.einsum('aj,bj,sj->abs', values, values,
                    weighted) / table.group_order()
    rounded = np.rint(raw.real)
    residual = float(np.abs(raw - rounded).max())
    if residual >= integrality or (rounded < 0).any():
        raise ZAFAException(
            f"non-integral multiplicity in fusion of {table.label()}: "
            f"residual {residual:.3e}")
    logger.debug(f"Fusion tensor of {table.label()} has rounding residual "
                 f"{residual:.3e}")
    return FusionTensor(rounded.astype(np.int64))


def fusion_tensor(table, tolerances=DEFAULT_TOLERANCES):
    """
    Decomposes every product chi_pi chi_pi' by the
    class-sum inner product
    m = (1/|G|) sum_j |C_j| chi_pi chi_pi' conj(chi_sigma).

    Parameters
    ----------
    table : CharacterTable
    tolerances : Tolerances

    Returns
    -------
    FusionTensor

    Raises
    ------
    ZAFAException
        "non-integral multiplicity" when a multiplicity
        is not a non-negative integer within tolerance
    """

    return _compute_fusion(_TableKey(table), tolerances['integrality'])


def multiply(u, v, tolerances=DEFAULT_TOLERANCES):
    """
    The product of ZA(G), the bilinear extension
    of the fusion rule.

    Parameters
    ----------
    u, v : CentralElement

    Returns
    -------
    CentralElement

    Raises
    ------
    ZAFAException
        "mismatched tables" if u and v live on
        different groups
    """

    check_same_table(u.table(), v.table())
    tensor = fusion_tensor(u.table(), tolerances)
    coeffs = np.einsum('a,b,abs->s', u.coeffs(), v.coeffs(),
                       tensor.multiplicities())
    return CentralElement(u.table(), coeffs)


def hypergroup_convolve(table, p, q, tolerances=DEFAULT_TOLERANCES):
    """
    Convolution of l1(G^, d^2):
    delta_pi * delta_pi' = sum_sigma m d_sigma/(d_pi d_pi') delta_sigma,
    extended bilinearly.

    Parameters
    ----------
    table : CharacterTable
    p, q : array-like of complex
        Weight vectors over the irreducibles

    Returns
    -------
    numpy.ndarray
    """

    tensor = fusion_tensor(table, tolerances)
    coefficients = tensor.convolution_coefficients(table.degrees())
    return np.einsum('a,b,abs->s', np.asarray(p), np.asarray(q),
                     coefficients)
