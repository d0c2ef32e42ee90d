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
import math

import numpy as np

from zafa.zafa_exceptions import ZAFAException
from zafa.config.tolerances import DEFAULT_TOLERANCES
from zafa.character.character_table import compute_character_table
from zafa.algebra.diagonal import kronecker_table
from zafa.group.constructions import direct_product
from .summation import compensated_sum, weighted_pair_sums

logger = logging.getLogger(__name__)

# Lower bound of AM(ZA(G)) over non-abelian finite groups
NON_ABELIAN_LOWER_BOUND = 2 / math.sqrt(3)

# Lower bound of AM(ZL1(G)) over non-abelian finite groups
ZL1_LOWER_BOUND = 1 + 1 / 300

# Largest product order also checked on the element-level group
ELEMENT_LEVEL_LIMIT = 2000


def am_za(table):
    """
    AM(ZA(G)) =
    (1/|G|^2) sum_{pi,pi'} d_pi d_pi' |sum_C |C|^2 chi_pi(C) conj(chi_pi'(C))|

    Parameters
    ----------
    table : CharacterTable

    Returns
    -------
    float
    """

    values = np.ascontiguousarray(table.values())
    sizes = table.class_sizes().astype(np.float64)
    degrees = table.degrees().astype(np.float64)
    order_sq = float(table.group_order())**2

    inner = np.abs(weighted_pair_sums(values, sizes**2))
    terms = np.outer(degrees, degrees) * inner
    if logger.isEnabledFor(logging.DEBUG):
        diagonal = compensated_sum(np.ascontiguousarray(
            np.diag(terms))) / order_sq
        logger.debug(f"Diagonal restriction bound for {table.label()}: "
                     f"{diagonal:.12g}")
    return compensated_sum(terms.reshape(-1)) / order_sq


def am_zl1(table):
    """
    AM(ZL1(G)) =
    (1/|G|^2) sum_{C,C'} |C||C'| |sum_pi d_pi^2 chi_pi(C) conj(chi_pi(C'))|

    Parameters
    ----------
    table : CharacterTable

    Returns
    -------
    float
    """

    columns = np.ascontiguousarray(table.values().T)
    sizes = table.class_sizes().astype(np.float64)
    degrees = table.degrees().astype(np.float64)

    inner = np.abs(weighted_pair_sums(columns, degrees**2))
    terms = np.outer(sizes, sizes) * inner
    return compensated_sum(terms.reshape(-1)) / float(table.group_order())**2


def am_za_product(values, tolerances=DEFAULT_TOLERANCES):
    """
    AM(ZA(G_1 x ... x G_n)) as the product of the
    factor constants. The empty product is 1.

    Raises
    ------
    ZAFAException
        If a factor constant is below 1
    """

    values = [float(v) for v in values]
    for value in values:
        if value < 1 - tolerances['round-trip']:
            raise ZAFAException(
                f"Amenability constant {value} is below 1")
    return math.prod(values)


class DivergenceCertificate:
    """
    Lower bounds AM(ZA(G^k)) = AM(ZA(G))^k for
    k = 1..n next to the comparison (2/sqrt 3)^k
    """

    def __init__(self, label, am, bounds, comparison):
        self._label = label
        self._am = am
        self._bounds = bounds
        self._comparison = comparison

    def label(self):
        return self._label

    def am(self):
        return self._am

    def bounds(self):
        return self._bounds

    def comparison(self):
        return self._comparison

    def is_monotone(self):
        return all(b > a for a, b in zip(self._bounds, self._bounds[1:]))

    def dominates(self):
        return all(b >= c for b, c in zip(self._bounds, self._comparison))

    def certified(self):
        return self.is_monotone() and self.dominates()

    def to_rows(self):
        return [{
            'group': self._label,
            'k': k,
            'lower_bound': bound,
            'comparison': comparison,
        } for k, (bound, comparison) in enumerate(
            zip(self._bounds, self._comparison), start=1)]


def product_divergence_certificate(n, table, tolerances=DEFAULT_TOLERANCES):
    """
    Parameters
    ----------
    n : int
        Number of factors
    table : CharacterTable
        Table of the repeated non-abelian factor

    Returns
    -------
    DivergenceCertificate

    Raises
    ------
    ZAFAException
        "certificate vacuous: AM = 1" for an abelian
        factor
    """

    if n < 1:
        raise ZAFAException(f"Certificate length must be positive, got {n}")
    am = am_za(table)
    if abs(am - 1) <= tolerances['round-trip']:
        raise ZAFAException(
            f"certificate vacuous: AM = 1 for {table.label()}")
    bounds = [am**k for k in range(1, n + 1)]
    comparison = [NON_ABELIAN_LOWER_BOUND**k for k in range(1, n + 1)]
    return DivergenceCertificate(table.label(), am, bounds, comparison)


def product_law_residual(first,
                         second,
                         table_fn=compute_character_table,
                         element_level=None):
    """
    Compares AM(ZA(G x H)) with AM(ZA(G)) AM(ZA(H)),
    computing the left side on the Kronecker table
    and, for small products, on the element-level
    product group.

    Parameters
    ----------
    first, second : FiniteGroup
    table_fn : callable
        Maps a group to its character table
    element_level : bool or None
        Whether to build the element-level product;
        None decides by ELEMENT_LEVEL_LIMIT

    Returns
    -------
    float
        Largest absolute deviation from the product law
    """

    first_table = table_fn(first)
    second_table = table_fn(second)
    expected = am_za(first_table) * am_za(second_table)
    kronecker = am_za(kronecker_table(first_table, second_table))
    residual = abs(kronecker - expected)

    if element_level is None:
        element_level = first.order() * second.order() <= ELEMENT_LEVEL_LIMIT
    if element_level:
        product = direct_product(first, second)
        element = am_za(table_fn(product))
        residual = max(residual, abs(element - expected))
        logger.debug(f"AM(ZA({product.label()})) = {element:.12g} on the "
                     f"element-level group, expected {expected:.12g}")
    return residual


def factor_bound_holds(product_table,
                       factor_table,
                       tolerances=DEFAULT_TOLERANCES):
    """
    AM(ZA(G x F)) >= AM(ZA(F))
    """

    return am_za(product_table) >= am_za(factor_table) - tolerances[
        'round-trip']
