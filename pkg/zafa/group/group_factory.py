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

import re

from zafa.zafa_exceptions import ZAFAException
from .constructions import (from_permutation_generators, direct_product,
                            DEFAULT_ORDER_CAP)

CATALOG_PATTERN = re.compile(r'^(Z|C|D|S|A|Q)(\d+)$')

# Quaternion units 1,i,j,k,-1,-i,-j,-k acting by left multiplication
QUATERNION_I = [1, 4, 3, 6, 5, 0, 7, 2]
QUATERNION_J = [2, 7, 4, 1, 6, 3, 0, 5]


class GroupFactory:
    """
    A factory for the built-in catalog of
    finite groups and for group-spec documents
    """

    @staticmethod
    def create_cyclic(n):
        """
        Parameters
        ----------
        n : int
            Order of the cyclic group, n >= 1

        Returns
        -------
        FiniteGroup
            Z_n generated by an n-cycle
        """

        if n < 1:
            raise ZAFAException(f"Cyclic group order must be positive, got {n}")
        generators = [] if n == 1 else [[(i + 1) % n for i in range(n)]]
        return from_permutation_generators(n, generators, label=f"Z{n}")

    @staticmethod
    def create_dihedral(n):
        """
        Symmetries of the regular n-gon, order 2n.
        """

        if n < 3:
            raise ZAFAException(
                f"Dihedral group needs at least 3 vertices, got {n}")
        rotation = [(i + 1) % n for i in range(n)]
        reflection = [(-i) % n for i in range(n)]
        return from_permutation_generators(n, [rotation, reflection],
                                           label=f"D{n}")

    @staticmethod
    def create_symmetric(n):
        if n < 1 or n > 6:
            raise ZAFAException(f"Symmetric group S{n} is not in the catalog")
        if n == 1:
            return from_permutation_generators(1, [], label="S1")
        transposition = [1, 0] + list(range(2, n))
        cycle = [(i + 1) % n for i in range(n)]
        return from_permutation_generators(n, [transposition, cycle],
                                           label=f"S{n}")

    @staticmethod
    def create_alternating(n):
        if n < 1 or n > 6:
            raise ZAFAException(
                f"Alternating group A{n} is not in the catalog")
        generators = []
        for k in range(2, n):
            # the 3-cycle (0 1 k)
            perm = list(range(n))
            perm[0], perm[1], perm[k] = 1, k, 0
            generators.append(perm)
        return from_permutation_generators(max(n, 1),
                                           generators,
                                           label=f"A{n}")

    @staticmethod
    def create_quaternion(n=8):
        if n != 8:
            raise ZAFAException(
                f"Only the quaternion group Q8 is in the catalog, got Q{n}")
        return from_permutation_generators(8, [QUATERNION_I, QUATERNION_J],
                                           label="Q8")

    @staticmethod
    def from_catalog(name, order_cap=DEFAULT_ORDER_CAP):
        """
        Parameters
        ----------
        name : str
            A catalog name such as "Z6", "D4", "S3",
            "A5", "Q8", or an x-joined product such
            as "S3xZ2"

        Returns
        -------
        FiniteGroup

        Raises
        ------
        ZAFAException
            If the name is not in the catalog
        """

        name = name.strip()
        factors = name.split('x')
        if len(factors) > 1:
            group = GroupFactory.from_catalog(factors[0], order_cap)
            for factor in factors[1:]:
                group = direct_product(group,
                                       GroupFactory.from_catalog(
                                           factor, order_cap),
                                       order_cap=order_cap)
            return group

        match = CATALOG_PATTERN.match(name)
        if not match:
            raise ZAFAException(f"Unknown catalog group '{name}'")
        family, n = match.group(1), int(match.group(2))
        if family in ('Z', 'C'):
            return GroupFactory.create_cyclic(n)
        if family == 'D':
            return GroupFactory.create_dihedral(n)
        if family == 'S':
            return GroupFactory.create_symmetric(n)
        if family == 'A':
            return GroupFactory.create_alternating(n)
        return GroupFactory.create_quaternion(n)

    @staticmethod
    def from_spec(spec, order_cap=DEFAULT_ORDER_CAP):
        """
        Builds a group from a group-spec document:
        {"catalog": name}, {"permutation": {"degree": n,
        "generators": [...]}} or {"product": [spec, ...]}.

        Parameters
        ----------
        spec : dict
            The parsed JSON document

        Returns
        -------
        FiniteGroup

        Raises
        ------
        ZAFAException
            If the document is malformed
        """

        if not isinstance(spec, dict) or len(spec) != 1:
            raise ZAFAException(
                f"Malformed group spec {spec!r}: expected exactly one of "
                "'catalog', 'permutation', 'product'")
        kind, body = next(iter(spec.items()))
        if kind == 'catalog':
            if not isinstance(body, str):
                raise ZAFAException(f"Malformed catalog name {body!r}")
            return GroupFactory.from_catalog(body, order_cap)
        if kind == 'permutation':
            try:
                degree = int(body['degree'])
                generators = [list(map(int, g)) for g in body['generators']]
            except (KeyError, TypeError, ValueError) as e:
                raise ZAFAException(f"Malformed permutation spec: {e}")
            return from_permutation_generators(degree,
                                               generators,
                                               label=body.get('label'),
                                               order_cap=order_cap)
        if kind == 'product':
            if not isinstance(body, list) or not body:
                raise ZAFAException(
                    "Malformed product spec: expected a non-empty list")
            group = GroupFactory.from_spec(body[0], order_cap)
            for factor in body[1:]:
                group = direct_product(group,
                                       GroupFactory.from_spec(
                                           factor, order_cap),
                                       order_cap=order_cap)
            return group
        raise ZAFAException(f"Unknown group spec kind '{kind}'")
