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
from zafa.config.tolerances import DEFAULT_TOLERANCES
from zafa.group.conjugacy import conjugacy_classes, class_constants

logger = logging.getLogger(__name__)

DEFAULT_MAX_RETRIES = 8

# Decimals used by the canonical row order
ORDERING_DECIMALS = 6


class CharacterTable:
    """
    The complex irreducible character table
    X[pi][j] = chi_pi(C_j) of a finite group.
    Row 0 is the trivial character and column 0
    holds the degrees.
    """

    def __init__(self,
                 label,
                 group_order,
                 class_sizes,
                 degrees,
                 values,
                 digest,
                 conjugacy=None):
        """
        Parameters
        ----------
        label : str
            Name of the group
        group_order : int
            |G|
        class_sizes : array-like of int
            |C_j| for every class
        degrees : array-like of int
            d_pi for every irreducible
        values : numpy.ndarray
            k x k complex character values
        digest : str
            Digest of the group the table belongs to
        conjugacy : ConjugacyData or None
            Element-level class data, absent for tables
            assembled from factors or loaded from cache
        """

        self._label = label
        self._group_order = int(group_order)
        self._class_sizes = np.asarray(class_sizes, dtype=np.int64)
        self._degrees = np.asarray(degrees, dtype=np.int64)
        self._values = np.asarray(values, dtype=np.complex128)
        self._digest = digest
        self._conjugacy = conjugacy
        self._conjugates = None

    def label(self):
        return self._label

    def k(self):
        return len(self._degrees)

    def group_order(self):
        return self._group_order

    def class_sizes(self):
        return self._class_sizes

    def degrees(self):
        return self._degrees

    def values(self):
        return self._values

    def digest(self):
        return self._digest

    def conjugacy(self):
        return self._conjugacy

    def is_abelian(self):
        return self.k() == self._group_order

    def with_values(self, values):
        """
        Returns a copy of this table carrying
        different character values. Used to inject
        corrupted tables into verification runs.
        """

        return CharacterTable(self._label, self._group_order,
                              self._class_sizes, self._degrees, values,
                              self._digest, self._conjugacy)

    def orthogonality_residual(self):
        """
        Returns
        -------
        float
            Largest deviation from the row and
            column orthogonality relations
        """

        values = self._values
        sizes = self._class_sizes.astype(float)
        order = float(self._group_order)
        k = self.k()
        rows = (values * sizes) @ values.conj().T / order
        columns = (values.conj().T @ values) * sizes[:, None] / order
        return float(
            max(
                np.abs(rows - np.eye(k)).max(),
                np.abs(columns - np.eye(k)).max()))

    def conjugate_rows(self, tolerance=DEFAULT_TOLERANCES['orthogonality']):
        """
        Returns
        -------
        numpy.ndarray
            pi -> pi-bar, the row holding the complex
            conjugate character

        Raises
        ------
        ZAFAException
            If some conjugate row is missing
        """

        if self._conjugates is None:
            conjugated = self._values.conj()
            distance = np.abs(self._values[None, :, :] -
                              conjugated[:, None, :]).max(axis=2)
            conjugates = np.argmin(distance, axis=1)
            if (distance[np.arange(self.k()), conjugates] >
                    max(tolerance, 1e-6)).any():
                raise ZAFAException(
                    f"Character table of {self._label} is not closed "
                    "under complex conjugation")
            self._conjugates = conjugates
        return self._conjugates

    def to_document(self):
        """
        Returns
        -------
        dict
            JSON-ready form with values as [re, im] pairs
        """

        return {
            'label': self._label,
            'group_order': self._group_order,
            'digest': self._digest,
            'class_sizes': [int(s) for s in self._class_sizes],
            'degrees': [int(d) for d in self._degrees],
            'values': [[[float(v.real), float(v.imag)] for v in row]
                       for row in self._values],
        }

    @staticmethod
    def from_document(document, conjugacy=None, label=None):
        """
        Rebuilds a table written by to_document.
        A given label replaces the stored one.

        Raises
        ------
        ZAFAException
            If the document is malformed
        """

        try:
            values = np.array(
                [[complex(re, im) for re, im in row]
                 for row in document['values']],
                dtype=np.complex128)
            return CharacterTable(label=label or document['label'],
                                  group_order=document['group_order'],
                                  class_sizes=document['class_sizes'],
                                  degrees=document['degrees'],
                                  values=values,
                                  digest=document['digest'],
                                  conjugacy=conjugacy)
        except (KeyError, TypeError, ValueError) as e:
            raise ZAFAException(f"Malformed character table document: {e}")


def _min_relative_gap(eigenvalues):
    if len(eigenvalues) < 2:
        return np.inf
    scale = max(1.0, float(np.abs(eigenvalues).max()))
    gaps = np.abs(eigenvalues[:, None] - eigenvalues[None, :])
    np.fill_diagonal(gaps, np.inf)
    return float(gaps.min()) / scale


def _canonical_key(degree, row):
    rounded = np.round(row, ORDERING_DECIMALS)
    # descending values put the trivial character first among degree 1
    return (int(degree), tuple(
        (-float(v.real) + 0.0, -float(v.imag) + 0.0) for v in rounded))


def verify_table(table, tolerances=DEFAULT_TOLERANCES):
    """
    Checks the integrality and orthogonality
    invariants of a table.

    Raises
    ------
    ZAFAException
        "table verification failed" with the
        violated invariant
    """

    degrees = table.degrees()
    order = table.group_order()
    if int((degrees**2).sum()) != order:
        raise ZAFAException(
            f"table verification failed for {table.label()}: "
            f"sum of squared degrees {int((degrees ** 2).sum())} != {order}")
    if (order % degrees != 0).any():
        raise ZAFAException(
            f"table verification failed for {table.label()}: "
            "a degree does not divide the group order")
    residual = table.orthogonality_residual()
    if residual > tolerances['orthogonality']:
        raise ZAFAException(
            f"table verification failed for {table.label()}: "
            f"orthogonality residual {residual:.3e}")
    return residual


def compute_character_table(group,
                            seed=0,
                            tolerances=DEFAULT_TOLERANCES,
                            max_retries=DEFAULT_MAX_RETRIES):
    """
    Computes the character table from the class
    multiplication matrices. A random real linear
    combination of the matrices is diagonalised; its
    eigenvectors are the common eigenvectors of all
    class matrices, i.e. the central characters.

    Parameters
    ----------
    group : FiniteGroup
    seed : int
        Seed for the random combinations
    tolerances : Tolerances
    max_retries : int
        Number of random combinations tried before
        giving up on clustered eigenvalues

    Returns
    -------
    CharacterTable
        Rows sorted by degree then by values

    Raises
    ------
    ZAFAException
        "degenerate spectrum" when no combination
        separates the characters, "table verification
        failed" when the result is not a valid table
    """

    conjugacy = conjugacy_classes(group)
    constants = class_constants(group, conjugacy)
    sizes = conjugacy.sizes()
    k = conjugacy.num_classes()
    order = group.order()
    matrices = constants.counts().astype(np.float64)

    rng = np.random.default_rng(seed)
    for attempt in range(max_retries):
        weights = rng.standard_normal(k)
        combination = np.tensordot(weights, matrices, axes=1)
        eigenvalues, eigenvectors = np.linalg.eig(combination)
        gap = _min_relative_gap(eigenvalues)
        if gap >= tolerances['cluster']:
            break
        logger.debug(f"Eigenvalue gap {gap:.3e} too small for "
                     f"{group.label()} on attempt {attempt + 1}")
    else:
        raise ZAFAException(
            f"degenerate spectrum for {group.label()} after "
            f"{max_retries} random combinations")

    vectors = eigenvectors.T.astype(np.complex128)
    if (np.abs(vectors[:, 0]) < tolerances['integrality']).any():
        raise ZAFAException(
            f"degenerate spectrum for {group.label()}: eigenvector "
            "vanishes on the identity class")
    vectors = vectors / vectors[:, :1]

    norms = (np.abs(vectors)**2 / sizes).sum(axis=1)
    raw_degrees = np.sqrt(order / norms)
    degrees = np.rint(raw_degrees).astype(np.int64)
    if (np.abs(raw_degrees - degrees) > tolerances['integrality']).any() or \
            (degrees < 1).any():
        raise ZAFAException(
            f"table verification failed for {group.label()}: "
            f"non-integral degrees {raw_degrees}")
    values = degrees[:, None] * vectors / sizes[None, :]

    rows = sorted(range(k),
                  key=lambda r: _canonical_key(degrees[r], values[r]))
    table = CharacterTable(label=group.label(),
                           group_order=order,
                           class_sizes=sizes,
                           degrees=degrees[rows],
                           values=values[rows],
                           digest=group.digest(),
                           conjugacy=conjugacy)
    residual = verify_table(table, tolerances)
    logger.debug(f"Character table of {group.label()} has k={k}, "
                 f"orthogonality residual {residual:.3e}")
    return table
