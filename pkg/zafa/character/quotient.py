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

from zafa.config.tolerances import DEFAULT_TOLERANCES
from zafa.group.constructions import verify_normal_subgroup
from zafa.algebra.central_element import CentralElement
from zafa.algebra.class_function import (ClassFunction, table_conjugacy,
                                         to_class_function,
                                         from_class_function)


def characters_through_quotient(group,
                                table,
                                subgroup,
                                tolerances=DEFAULT_TOLERANCES):
    """
    The rows pi with N in ker(pi), i.e.
    chi_pi(n) = d_pi on N. These are the
    characters of G/N pulled back to G.

    Parameters
    ----------
    group : FiniteGroup
    table : CharacterTable
    subgroup : iterable of int
        Element indices of a normal subgroup N

    Returns
    -------
    list of int
        Sorted row indices

    Raises
    ------
    ZAFAException
        "invalid normal subgroup"
    """

    members = verify_normal_subgroup(group, subgroup)
    conjugacy = table_conjugacy(group, table)
    classes = np.unique(conjugacy.class_of()[members])
    values = table.values()[:, classes]
    degrees = table.degrees()[:, None]
    in_kernel = (np.abs(values - degrees) <
                 tolerances['integrality']).all(axis=1)
    return [int(pi) for pi in np.flatnonzero(in_kernel)]


def project_PN(u, group, subgroup, tolerances=DEFAULT_TOLERANCES):
    """
    The quotient projection P_N: keeps the
    coefficients of characters trivial on N
    and zeroes the rest

    Parameters
    ----------
    u : CentralElement
    group : FiniteGroup
    subgroup : iterable of int

    Returns
    -------
    CentralElement
    """

    rows = characters_through_quotient(group, u.table(), subgroup,
                                       tolerances)
    coeffs = np.zeros_like(u.coeffs())
    coeffs[rows] = u.coeffs()[rows]
    return CentralElement(u.table(), coeffs)


def coset_average(group, table, subgroup, f):
    """
    P_N f(x) = (1/|N|) sum_{n in N} f(xn),
    computed element by element

    Parameters
    ----------
    group : FiniteGroup
    table : CharacterTable
    subgroup : iterable of int
    f : ClassFunction

    Returns
    -------
    ClassFunction
    """

    members = verify_normal_subgroup(group, subgroup)
    conjugacy = table_conjugacy(group, table)
    lifted = f.lift(conjugacy.class_of())
    averaged = np.empty(table.k(), dtype=np.complex128)
    for j, x in enumerate(conjugacy.representatives()):
        cosets = [group.multiply(int(x), int(n)) for n in members]
        averaged[j] = lifted[cosets].mean()
    return ClassFunction(table, averaged)


def inflate(u, quotient, coset_of, group, table):
    """
    Pulls an element of ZA(G/N) back along the
    quotient map G -> G/N. The result is fixed by
    P_N and has the same norm.

    Parameters
    ----------
    u : CentralElement
        Element over the table of the quotient
    quotient : FiniteGroup
        G/N as built by quotient_group
    coset_of : numpy.ndarray
        Coset index of every element of G
    group : FiniteGroup
    table : CharacterTable
        Table of G

    Returns
    -------
    CentralElement
    """

    quotient_classes = table_conjugacy(quotient, u.table()).class_of()
    on_cosets = to_class_function(u).lift(quotient_classes)
    representatives = table_conjugacy(group, table).representatives()
    values = on_cosets[coset_of[representatives]]
    return from_class_function(ClassFunction(table, values))
