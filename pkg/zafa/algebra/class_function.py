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
from zafa.group.conjugacy import conjugacy_classes
from .central_element import CentralElement, check_same_table


class ClassFunction:
    """
    A function on G that is constant on conjugacy
    classes, stored by its value on each class
    """

    def __init__(self, table, values):
        values = np.asarray(values, dtype=np.complex128)
        if values.shape != (table.k(), ):
            raise ZAFAException(
                f"Expected {table.k()} class values for {table.label()}, "
                f"got shape {values.shape}")
        self._table = table
        self._values = values

    def table(self):
        return self._table

    def values(self):
        return self._values

    def lift(self, class_of):
        """
        Returns
        -------
        numpy.ndarray
            The value at every element of G
        """

        return self._values[class_of]

    def pointwise(self, other):
        check_same_table(self._table, other.table())
        return ClassFunction(self._table, self._values * other.values())

    def max_deviation(self, other):
        check_same_table(self._table, other.table())
        return float(np.abs(self._values - other.values()).max())


def to_class_function(u):
    """
    f(C_j) = sum_pi alpha_pi chi_pi(C_j)

    Parameters
    ----------
    u : CentralElement

    Returns
    -------
    ClassFunction
    """

    return ClassFunction(u.table(), u.coeffs() @ u.table().values())


def from_class_function(f):
    """
    alpha_pi = (1/|G|) sum_j |C_j| f(C_j) conj(chi_pi(C_j))

    Parameters
    ----------
    f : ClassFunction

    Returns
    -------
    CentralElement
    """

    table = f.table()
    weighted = f.values() * table.class_sizes()
    coeffs = table.values().conj() @ weighted / table.group_order()
    return CentralElement(table, coeffs)


def table_conjugacy(group, table):
    """
    Returns the class data of the group in the
    column order of the table

    Raises
    ------
    ZAFAException
        "mismatched tables" if the table belongs
        to another group
    """

    conjugacy = table.conjugacy()
    if conjugacy is None:
        conjugacy = conjugacy_classes(group)
    if len(conjugacy.class_of()) != group.order() or \
            conjugacy.num_classes() != table.k():
        raise ZAFAException(
            f"mismatched tables: {table.label()} does not describe "
            f"{group.label()}")
    return conjugacy


def central_projection(group, table, values):
    """
    Z_G F(x) = (1/|G|) sum_s F(s x s^-1). The
    conjugates s x s^-1 run over the class of x,
    each hit |G|/|C| times, so the result is the
    class average of F.

    Parameters
    ----------
    group : FiniteGroup
    table : CharacterTable
        Table of the same group
    values : array-like of complex
        F at every element of G

    Returns
    -------
    ClassFunction
    """

    values = np.asarray(values, dtype=np.complex128)
    if values.shape != (group.order(), ):
        raise ZAFAException(
            f"Expected {group.order()} values on {group.label()}, "
            f"got shape {values.shape}")
    conjugacy = table_conjugacy(group, table)
    sums = np.zeros(table.k(), dtype=np.complex128)
    np.add.at(sums, conjugacy.class_of(), values)
    return ClassFunction(table, sums / conjugacy.sizes())


def expectation_residual(group, table, u, values):
    """
    Largest deviation from Z_G(u F) = u Z_G(F)
    for a central element u and an arbitrary
    function F on G.

    Returns
    -------
    float
    """

    conjugacy = table_conjugacy(group, table)
    u_values = to_class_function(u)
    lhs = central_projection(group, table,
                             u_values.lift(conjugacy.class_of()) * values)
    rhs = u_values.pointwise(central_projection(group, table, values))
    return lhs.max_deviation(rhs)
