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
from .finite_group import FiniteGroup, TABLE_ORDER_LIMIT

logger = logging.getLogger(__name__)

DEFAULT_ORDER_CAP = 20000


def _validate_permutation(degree, perm):
    perm = np.asarray(perm, dtype=np.int64)
    if perm.shape != (degree, ) or not np.array_equal(np.sort(perm),
                                                       np.arange(degree)):
        raise ZAFAException(
            f"invalid permutation {list(perm)} for degree {degree}")
    return perm


def from_permutation_generators(degree,
                                generators,
                                label=None,
                                order_cap=DEFAULT_ORDER_CAP):
    """
    Enumerates the group generated by permutations
    of {0..degree-1} by breadth-first closure from
    the identity. Elements appear in discovery order:
    the identity, the generators in the given order,
    then products x*g in the order they are found.

    Parameters
    ----------
    degree : int
        Number of points acted on
    generators : list of list of int
        Zero-based image arrays
    label : str
        Name of the group, defaults to a description
        of the generators
    order_cap : int
        Largest order the closure may reach

    Returns
    -------
    FiniteGroup

    Raises
    ------
    ZAFAException
        On a non-bijective generator or when the
        closure exceeds order_cap
    """

    if degree < 1:
        raise ZAFAException(f"invalid permutation degree {degree}")
    gens = [_validate_permutation(degree, g) for g in generators]
    signature = f"perm:{degree}:" + '|'.join(
        ','.join(str(i) for i in g) for g in gens)
    if label is None:
        label = signature

    identity = np.arange(degree, dtype=np.int64)
    elements = [identity]
    words = ['e']
    index = {identity.tobytes(): 0}

    # Products x*g act as x[g[i]]
    position = 0
    while position < len(elements):
        current = elements[position]
        for gen_id, gen in enumerate(gens):
            product = current[gen]
            key = product.tobytes()
            if key not in index:
                if len(elements) >= order_cap:
                    raise ZAFAException(
                        f"order cap exceeded: closure of {label} grows "
                        f"past {order_cap} elements")
                index[key] = len(elements)
                elements.append(product)
                prefix = '' if words[position] == 'e' else words[
                    position] + '*'
                words.append(f"{prefix}g{gen_id}")
        position += 1

    order = len(elements)
    perms = np.array(elements, dtype=np.int64)
    inverse = np.array(
        [index[np.argsort(p).tobytes()] for p in perms], dtype=np.int64)
    generator_indices = sorted({index[g.tobytes()] for g in gens} - {0})
    logger.debug(f"Closure of {label} has order {order}")

    if order <= TABLE_ORDER_LIMIT:
        table = np.empty((order, order), dtype=np.int64)
        for a in range(order):
            products = perms[a][perms]
            table[a] = [index[row.tobytes()] for row in products]
        return FiniteGroup(order=order,
                           identity=0,
                           inverse=inverse,
                           label=label,
                           signature=signature,
                           table=table,
                           element_words=words,
                           generators=generator_indices)

    def multiply_fn(a, b):
        return index[perms[a][perms[b]].tobytes()]

    return FiniteGroup(order=order,
                       identity=0,
                       inverse=inverse,
                       label=label,
                       signature=signature,
                       multiply_fn=multiply_fn,
                       element_words=words,
                       generators=generator_indices)


def direct_product(first, second, label=None, order_cap=DEFAULT_ORDER_CAP):
    """
    Componentwise product group. The pair (g, h)
    has index g*|H| + h.

    Parameters
    ----------
    first, second : FiniteGroup
        The factors G and H
    label : str
        Defaults to "GxH"
    order_cap : int
        Largest order allowed for the product

    Returns
    -------
    FiniteGroup

    Raises
    ------
    ZAFAException
        If |G||H| exceeds order_cap
    """

    n_first, n_second = first.order(), second.order()
    order = n_first * n_second
    if label is None:
        label = f"{first.label()}x{second.label()}"
    if order > order_cap:
        raise ZAFAException(
            f"order cap exceeded: {label} has order {order} > {order_cap}")

    signature = f"product({first.signature()};{second.signature()})"
    identity = first.identity() * n_second + second.identity()
    inverse = (first.inverses()[:, None] * n_second +
               second.inverses()[None, :]).reshape(order)

    words = None
    if first.element_words() and second.element_words():
        words = [
            f"({u},{v})" for u in first.element_words()
            for v in second.element_words()
        ]
    # G x {e} and {e} x H generate the product
    generators = [
        g * n_second + second.identity() for g in first.generators()
    ] + [first.identity() * n_second + h for h in second.generators()]

    if (order <= TABLE_ORDER_LIMIT and first.table() is not None
            and second.table() is not None):
        t_first, t_second = first.table(), second.table()
        table = (t_first[:, None, :, None] * n_second +
                 t_second[None, :, None, :]).reshape(order, order)
        return FiniteGroup(order=order,
                           identity=identity,
                           inverse=inverse,
                           label=label,
                           signature=signature,
                           table=table,
                           element_words=words,
                           generators=generators)

    def multiply_fn(a, b):
        g1, h1 = divmod(a, n_second)
        g2, h2 = divmod(b, n_second)
        return first.multiply(g1, g2) * n_second + second.multiply(h1, h2)

    return FiniteGroup(order=order,
                       identity=identity,
                       inverse=inverse,
                       label=label,
                       signature=signature,
                       multiply_fn=multiply_fn,
                       element_words=words,
                       generators=generators)


def verify_normal_subgroup(group, subset):
    """
    Checks that subset is a normal subgroup:
    contains the identity and is closed under
    products, inverses and conjugation.

    Returns
    -------
    numpy.ndarray
        Sorted element indices of the subgroup

    Raises
    ------
    ZAFAException
        "invalid normal subgroup" on any failure
    """

    members = np.unique(np.asarray(list(subset), dtype=np.int64))
    n = group.order()
    if len(members) == 0 or members[0] < 0 or members[-1] >= n:
        raise ZAFAException(
            "invalid normal subgroup: indices out of range")
    in_subset = np.zeros(n, dtype=bool)
    in_subset[members] = True
    if not in_subset[group.identity()]:
        raise ZAFAException("invalid normal subgroup: identity missing")
    if not in_subset[group.inverses()[members]].all():
        raise ZAFAException("invalid normal subgroup: not closed under inverse")

    table = group.table()
    for a in members:
        if table is not None:
            products = table[a, members]
        else:
            products = [group.multiply(a, b) for b in members]
        if not in_subset[products].all():
            raise ZAFAException(
                "invalid normal subgroup: not closed under product")
    for g in range(n):
        g_inv = group.inverse(g)
        for x in members:
            if not in_subset[group.multiply(group.multiply(g, x), g_inv)]:
                raise ZAFAException(
                    "invalid normal subgroup: not closed under conjugation")
    return members


def quotient_group(group, subgroup, label=None):
    """
    Builds G/N from the cosets xN, ordered by
    their smallest element index.

    Parameters
    ----------
    group : FiniteGroup
    subgroup : iterable of int
        Element indices of a normal subgroup N

    Returns
    -------
    FiniteGroup, numpy.ndarray
        The quotient group and the coset index
        of every element of G

    Raises
    ------
    ZAFAException
        If N is not a normal subgroup
    """

    members = verify_normal_subgroup(group, subgroup)
    n = group.order()
    coset_of = np.full(n, -1, dtype=np.int64)
    representatives = []
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        coset = [group.multiply(x, m) for m in members]
        coset_of[coset] = len(representatives)
        representatives.append(x)

    size = len(representatives)
    table = np.empty((size, size), dtype=np.int64)
    for i, a in enumerate(representatives):
        for j, b in enumerate(representatives):
            table[i, j] = coset_of[group.multiply(a, b)]

    if label is None:
        label = f"{group.label()}/N{len(members)}"
    signature = f"quotient({group.signature()};" + ','.join(
        str(m) for m in members) + ")"
    return FiniteGroup.from_table(table, label=label,
                                  signature=signature), coset_of
