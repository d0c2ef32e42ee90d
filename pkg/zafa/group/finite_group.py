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

import numpy as np

from zafa.zafa_exceptions import ZAFAException

logger = logging.getLogger(__name__)

# Groups up to this order keep a dense multiplication table
TABLE_ORDER_LIMIT = 4096

# Exhaustive associativity checks stop at this order
EXHAUSTIVE_CHECK_LIMIT = 512


class FiniteGroup:
    """
    A finite group whose elements are the
    dense indices 0..order-1. Products come
    from a precomputed multiplication table when
    the order allows it, otherwise from a
    multiplication callable.
    """

    def __init__(self,
                 order,
                 identity,
                 inverse,
                 label,
                 signature,
                 table=None,
                 multiply_fn=None,
                 element_words=None,
                 generators=None):
        """
        Parameters
        ----------
        order : int
            Number of elements
        identity : int
            Index of the identity element
        inverse : numpy.ndarray
            inverse[x] is the index of x^-1
        label : str
            Human-readable name of the group
        signature : str
            Canonical description of how the group was
            built, hashed into the group digest
        table : numpy.ndarray or None
            order x order multiplication table
        multiply_fn : callable or None
            Used for products when no table is stored
        element_words : list of str or None
            Generator word for each element
        generators : array-like of int or None
            Indices of a generating set, every
            non-identity element when None
        """

        if table is None and multiply_fn is None:
            raise ZAFAException(
                "A group needs a multiplication table or a multiply function")
        self._order = int(order)
        self._identity = int(identity)
        self._inverse = np.asarray(inverse, dtype=np.int64)
        self._label = label
        self._signature = signature
        self._table = table
        self._multiply_fn = multiply_fn
        self._element_words = element_words
        if generators is None:
            generators = [
                x for x in range(self._order) if x != self._identity
            ]
        self._generators = np.asarray(generators, dtype=np.int64)
        self._digest = hashlib.sha256(
            signature.encode('utf-8')).hexdigest()[:16]

    @staticmethod
    def from_table(table, label, signature=None):
        """
        Builds a group directly from its
        multiplication table.

        Parameters
        ----------
        table : array-like
            Square table; table[a][b] is the index of a*b
        label : str
            Name of the group
        signature : str
            Digest source, defaults to the table contents

        Returns
        -------
        FiniteGroup

        Raises
        ------
        ZAFAException
            If the table has no identity row
        """

        table = np.asarray(table, dtype=np.int64)
        order = table.shape[0]
        if table.shape != (order, order):
            raise ZAFAException("Multiplication table must be square")
        identity_rows = np.flatnonzero(
            (table == np.arange(order)[None, :]).all(axis=1))
        if len(identity_rows) != 1:
            raise ZAFAException(
                f"Multiplication table of {label} has no unique identity")
        identity = int(identity_rows[0])
        is_identity = table == identity
        if not (is_identity.sum(axis=1) == 1).all():
            raise ZAFAException(
                f"Multiplication table of {label} is missing inverses")
        inverse = np.argmax(is_identity, axis=1)
        if signature is None:
            signature = 'table:' + hashlib.sha256(
                table.astype(np.int64).tobytes()).hexdigest()
        return FiniteGroup(order=order,
                           identity=identity,
                           inverse=inverse,
                           label=label,
                           signature=signature,
                           table=table)

    def order(self):
        return self._order

    def identity(self):
        return self._identity

    def label(self):
        return self._label

    def signature(self):
        return self._signature

    def digest(self):
        """
        Returns
        -------
        str
            Stable hash of the group construction,
            used as the character-table cache key
        """

        return self._digest

    def table(self):
        """
        Returns
        -------
        numpy.ndarray or None
            The multiplication table, None for
            groups above TABLE_ORDER_LIMIT
        """

        return self._table

    def element_words(self):
        return self._element_words

    def generators(self):
        return self._generators

    def inverses(self):
        return self._inverse

    def inverse(self, x):
        return int(self._inverse[x])

    def multiply(self, a, b):
        if self._table is not None:
            return int(self._table[a, b])
        return int(self._multiply_fn(a, b))

    def is_abelian(self):
        if self._table is not None:
            return bool((self._table == self._table.T).all())
        return all(
            self.multiply(a, b) == self.multiply(b, a)
            for a in range(self._order) for b in range(a + 1, self._order))

    def check_associativity(self, samples=20000, seed=0):
        """
        Checks (ab)c = a(bc). Exhaustive up to
        EXHAUSTIVE_CHECK_LIMIT, sampled above.

        Parameters
        ----------
        samples : int
            Number of random triples for large groups
        seed : int
            Seed of the sampling generator

        Returns
        -------
        bool
            True if no violating triple was found
        """

        n = self._order
        if self._table is not None and n <= EXHAUSTIVE_CHECK_LIMIT:
            table = self._table
            for a in range(n):
                left = table[table[a]]
                right = table[a][table]
                if not np.array_equal(left, right):
                    return False
            return True

        rng = np.random.default_rng(seed)
        for a, b, c in rng.integers(0, n, size=(samples, 3)):
            left = self.multiply(self.multiply(a, b), c)
            right = self.multiply(a, self.multiply(b, c))
            if left != right:
                return False
        return True

    def __repr__(self):
        return f"FiniteGroup({self._label}, order={self._order})"
