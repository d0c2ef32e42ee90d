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
from zafa.group.group_factory import GroupFactory
from zafa.character.character_table import compute_character_table
from .class_hypergroup import ClassHypergroup
from .dual_hypergroup import DualHypergroup
from .orbit_hypergroup import OrbitHypergroup
from .polynomial_hypergroup import PolynomialHypergroup

HYPERGROUP_KINDS = ('dual', 'poly-n0', 'orbit', 'conj')

# Z / {+1, -1}
SIGN_MATRICES = [[[1]], [[-1]]]

# Rotations of Z^2 by multiples of 90 degrees
ROTATION_MATRICES = [[[1, 0], [0, 1]], [[0, -1], [1, 0]], [[-1, 0], [0, -1]],
                     [[0, 1], [-1, 0]]]


class HypergroupFactory:
    """
    A factory for the hypergroup instances and
    for hypergroup-spec documents
    """

    @staticmethod
    def create_dual(table):
        return DualHypergroup(table)

    @staticmethod
    def create_polynomial():
        return PolynomialHypergroup()

    @staticmethod
    def create_orbit(dimension, matrices, name=None):
        return OrbitHypergroup(dimension, matrices, name=name)

    @staticmethod
    def create_class(group):
        return ClassHypergroup(group)

    @staticmethod
    def _group(body):
        group = body.get('group')
        if isinstance(group, str):
            return GroupFactory.from_catalog(group)
        if isinstance(group, dict):
            return GroupFactory.from_spec(group)
        raise ZAFAException(
            f"Malformed hypergroup spec: group {group!r} is neither a "
            "catalog name nor a group spec")

    @staticmethod
    def from_spec(spec, table_fn=compute_character_table):
        """
        Builds a hypergroup from a spec document:
        {"kind": "dual", "group": ...},
        {"kind": "poly-n0"},
        {"kind": "orbit", "dimension": n, "matrices": [...]}
        or {"kind": "conj", "group": ...}

        Parameters
        ----------
        spec : dict
        table_fn : callable
            Maps a group to its character table

        Returns
        -------
        DiscreteHypergroup

        Raises
        ------
        ZAFAException
            If the document is malformed
        """

        if not isinstance(spec, dict) or 'kind' not in spec:
            raise ZAFAException(
                f"Malformed hypergroup spec {spec!r}: missing 'kind'")
        kind = spec['kind']
        if kind == 'dual':
            return HypergroupFactory.create_dual(
                table_fn(HypergroupFactory._group(spec)))
        if kind == 'poly-n0':
            return HypergroupFactory.create_polynomial()
        if kind == 'orbit':
            try:
                dimension = int(spec['dimension'])
                matrices = spec['matrices']
            except (KeyError, TypeError, ValueError) as e:
                raise ZAFAException(f"Malformed orbit hypergroup spec: {e}")
            return HypergroupFactory.create_orbit(dimension, matrices,
                                                  spec.get('name'))
        if kind == 'conj':
            return HypergroupFactory.create_class(
                HypergroupFactory._group(spec))
        raise ZAFAException(
            f"Unknown hypergroup kind '{kind}', expected one of "
            f"{', '.join(HYPERGROUP_KINDS)}")
