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

import itertools
import logging
from fractions import Fraction

import numpy as np

from zafa.zafa_exceptions import ZAFAException
from .hypergroup import DiscreteHypergroup

logger = logging.getLogger(__name__)


def _integer_matrix(entries):
    matrix = np.array(entries)
    if matrix.dtype.kind in 'iu':
        return matrix.astype(np.int64)
    if matrix.dtype.kind != 'f' or not np.isfinite(matrix).all() or (
            matrix != np.rint(matrix)).any():
        raise ZAFAException(
            f"invalid orbit group: non-integer entries in {entries!r}")
    return matrix.astype(np.int64)


def _validate_orbit_group(dimension, matrices):
    if dimension < 1:
        raise ZAFAException(f"invalid orbit group: dimension {dimension}")
    try:
        group = [_integer_matrix(m) for m in matrices]
    except (TypeError, ValueError) as e:
        raise ZAFAException(f"invalid orbit group: {e}")
    if not group:
        raise ZAFAException("invalid orbit group: no matrices")
    for matrix in group:
        if matrix.shape != (dimension, dimension):
            raise ZAFAException(
                f"invalid orbit group: matrix of shape {matrix.shape} "
                f"in dimension {dimension}")
        if round(abs(np.linalg.det(matrix))) != 1:
            raise ZAFAException(
                "invalid orbit group: matrix is not unimodular")

    keys = {m.tobytes() for m in group}
    if len(keys) != len(group):
        raise ZAFAException("invalid orbit group: repeated matrix")
    if np.eye(dimension, dtype=np.int64).tobytes() not in keys:
        raise ZAFAException("invalid orbit group: identity missing")
    for first, second in itertools.product(group, repeat=2):
        if (first @ second).tobytes() not in keys:
            raise ZAFAException(
                "invalid orbit group: not closed under multiplication")
    return group


class OrbitHypergroup(DiscreteHypergroup):
    """
    Z^n / F for a finite group F of unimodular
    integer matrices. Orbits are named by their
    lexicographically smallest point; convolution
    is computed exactly with rational weights.
    """

    def __init__(self, dimension, matrices, name=None):
        """
        Parameters
        ----------
        dimension : int
        matrices : list
            The elements of F as integer matrices

        Raises
        ------
        ZAFAException
            "invalid orbit group" if F is not a group
            of unimodular matrices
        """

        super().__init__(name or f"Z{dimension}/F{len(matrices)}")
        self._dimension = dimension
        self._group = _validate_orbit_group(dimension, matrices)
        self._orbits = {}

    def dimension(self):
        return self._dimension

    def group_order(self):
        return len(self._group)

    def images(self, v):
        """
        Returns
        -------
        list of tuple
            alpha(v) for every alpha in F, with
            repetitions
        """

        v = np.asarray(v, dtype=np.int64)
        return [tuple(int(x) for x in m @ v) for m in self._group]

    def orbit(self, v):
        """
        Returns
        -------
        tuple, frozenset
            The representative of the orbit of v
            and its points
        """

        v = tuple(int(x) for x in v)
        if v not in self._orbits:
            points = frozenset(self.images(v))
            representative = min(points)
            for point in points:
                self._orbits[point] = (representative, points)
        return self._orbits[v]

    def representative(self, v):
        return self.orbit(v)[0]

    def identity(self):
        return (0, ) * self._dimension

    def convolve_points(self, a, b):
        order = len(self._group)
        weight = Fraction(1, order * order)
        result = {}
        for x in self.images(a):
            for y in self.images(b):
                target = self.representative(
                    tuple(p + q for p, q in zip(x, y)))
                result[target] = result.get(target, 0) + weight
        return result

    def haar_weight(self, a):
        return len(self.orbit(a)[1])

    def involution(self, a):
        return self.representative(tuple(-x for x in a))

    def indices(self, limit):
        """
        Orbit representatives met while walking
        Z^n in growing max-norm shells
        """

        found = []
        seen = set()
        radius = 0
        while len(found) < limit:
            shell = [
                point for point in itertools.product(
                    range(-radius, radius + 1), repeat=self._dimension)
                if max((abs(x) for x in point), default=0) == radius
            ]
            for point in sorted(shell):
                representative = self.representative(point)
                if representative not in seen:
                    seen.add(representative)
                    found.append(representative)
                    if len(found) == limit:
                        break
            radius += 1
        return found
