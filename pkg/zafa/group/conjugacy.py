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

import logging

import numpy as np

from zafa.zafa_exceptions import ZAFAException
from .kernels import conjugacy_labels, tally_class_constants

logger = logging.getLogger(__name__)


class ConjugacyData:
    """
    The conjugacy classes C_0..C_{k-1} of a group,
    with C_0 = {identity}
    """

    def __init__(self, classes, class_of, inverse_class):
        """
        Parameters
        ----------
        classes : list of numpy.ndarray
            Sorted element indices of each class
        class_of : numpy.ndarray
            Class index of every element
        inverse_class : numpy.ndarray
            j -> j* with C_{j*} = {x^-1 : x in C_j}
        """

        self._classes = classes
        self._class_of = class_of
        self._inverse_class = inverse_class
        self._sizes = np.array([len(c) for c in classes], dtype=np.int64)
        self._representatives = np.array([c[0] for c in classes],
                                         dtype=np.int64)

    def num_classes(self):
        return len(self._classes)

    def classes(self):
        return self._classes

    def class_of(self):
        return self._class_of

    def sizes(self):
        return self._sizes

    def representatives(self):
        return self._representatives

    def inverse_class(self):
        return self._inverse_class


class ClassConstants:
    """
    Structure constants a(i,j,k) of the class
    algebra: the number of pairs (x, y) in
    C_i x C_j with xy = z_k for a fixed z_k in C_k
    """

    def __init__(self, counts):
        self._counts = counts

    def counts(self):
        return self._counts

    def __call__(self, i, j, k):
        return int(self._counts[i, j, k])

    def matrix(self, i):
        """
        Returns
        -------
        numpy.ndarray
            M_i[j][k] = a(i,j,k), the matrix of
            multiplication by the class sum of C_i
        """

        return self._counts[i]

    def size_identity_residual(self, sizes):
        """
        Returns the largest violation of
        sum_k a(i,j,k)|C_k| = |C_i||C_j|.
        """

        lhs = self._counts @ sizes
        rhs = np.outer(sizes, sizes)
        return int(np.abs(lhs - rhs).max())


def _labels_without_table(group):
    # closing each orbit under conjugation by the generators
    # visits every class member with len(generators) products each
    n = group.order()
    generators = [int(g) for g in group.generators()]
    inverses = [int(group.inverse(g)) for g in generators]
    labels = np.full(n, -1, dtype=np.int64)
    count = 0
    for x in range(n):
        if labels[x] >= 0:
            continue
        labels[x] = count
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g, g_inverse in zip(generators, inverses):
                z = group.multiply(group.multiply(g_inverse, y), g)
                if labels[z] < 0:
                    labels[z] = count
                    frontier.append(z)
        count += 1
    return labels


def conjugacy_classes(group):
    """
    Computes the conjugacy classes by orbit
    closure under conjugation. The identity class
    comes first, the rest are ordered by
    (size, smallest element index).

    Parameters
    ----------
    group : FiniteGroup

    Returns
    -------
    ConjugacyData
    """

    table = group.table()
    if table is not None:
        labels = conjugacy_labels(table, group.inverses())
    else:
        logger.info(
            f"Computing classes of {group.label()} without a product table")
        labels = _labels_without_table(group)

    orbits = [np.flatnonzero(labels == c) for c in range(labels.max() + 1)]
    identity = group.identity()
    orbits.sort(key=lambda c: (identity not in c, len(c), c[0]))

    class_of = np.empty(group.order(), dtype=np.int64)
    for index, members in enumerate(orbits):
        class_of[members] = index
    inverses = group.inverses()
    inverse_class = np.array([class_of[inverses[c[0]]] for c in orbits],
                             dtype=np.int64)
    logger.debug(f"{group.label()} has {len(orbits)} conjugacy classes")
    return ConjugacyData(orbits, class_of, inverse_class)


def class_constants(group, conjugacy):
    """
    Counts the class-algebra structure
    constants exactly.

    Parameters
    ----------
    group : FiniteGroup
    conjugacy : ConjugacyData
        Classes of the same group

    Returns
    -------
    ClassConstants

    Raises
    ------
    ZAFAException
        If the class data does not belong to the group
    """

    if len(conjugacy.class_of()) != group.order():
        raise ZAFAException(
            f"Conjugacy data does not match {group.label()}")
    representatives = conjugacy.representatives()
    inverses = group.inverses()
    table = group.table()
    if table is not None:
        quotients = table[inverses[:, None], representatives[None, :]]
    else:
        quotients = np.array([[
            group.multiply(group.inverse(x), int(z)) for z in representatives
        ] for x in range(group.order())],
                             dtype=np.int64)
    counts = tally_class_constants(conjugacy.class_of(),
                                   np.ascontiguousarray(quotients),
                                   conjugacy.num_classes())
    return ClassConstants(counts)
