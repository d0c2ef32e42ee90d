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

from zafa.config.tolerances import DEFAULT_TOLERANCES
from zafa.algebra.diagonal import diagonal_element
from .amenability import am_za, am_zl1, NON_ABELIAN_LOWER_BOUND, \
    ZL1_LOWER_BOUND


class AmenabilityReport:
    """
    Both amenability constants of one group with
    the bound checks and an independent
    recomputation through the diagonal element
    """

    def __init__(self, label, order, k, am_za, am_zl1, is_abelian,
                 lower_bound_check, zl1_bound_check, diagonal_norm):
        self._label = label
        self._order = order
        self._k = k
        self._am_za = am_za
        self._am_zl1 = am_zl1
        self._is_abelian = is_abelian
        self._lower_bound_check = lower_bound_check
        self._zl1_bound_check = zl1_bound_check
        self._diagonal_norm = diagonal_norm

    def label(self):
        return self._label

    def am_za(self):
        return self._am_za

    def am_zl1(self):
        return self._am_zl1

    def is_abelian(self):
        return self._is_abelian

    def lower_bound_check(self):
        return self._lower_bound_check

    def zl1_bound_check(self):
        return self._zl1_bound_check

    def diagonal_norm(self):
        return self._diagonal_norm

    def to_row(self):
        """
        Returns
        -------
        dict
            The report row of the am task
        """

        return {
            'group': self._label,
            'order': self._order,
            'k': self._k,
            'am_za': self._am_za,
            'am_zl1': self._am_zl1,
            'abelian': self._is_abelian,
            'lower_bound_check': self._lower_bound_check,
            'zl1_bound_check': self._zl1_bound_check,
            'diagonal_norm': self._diagonal_norm,
            # an observation per group, not a law
            'za_equals_zl1': abs(self._am_za - self._am_zl1) <= 1e-9,
        }


def amenability_report(table, tolerances=DEFAULT_TOLERANCES):
    """
    Abelian groups must give exactly 1 for both
    constants. Non-abelian groups must give
    AM(ZA) >= 2/sqrt(3) and AM(ZL1) >= 1 + 1/300.

    Parameters
    ----------
    table : CharacterTable
    tolerances : Tolerances

    Returns
    -------
    AmenabilityReport
    """

    eps = tolerances['round-trip']
    za = am_za(table)
    zl1 = am_zl1(table)
    abelian = table.is_abelian()
    if abelian:
        lower_bound_check = abs(za - 1) <= eps
        zl1_bound_check = abs(zl1 - 1) <= eps
    else:
        lower_bound_check = za >= NON_ABELIAN_LOWER_BOUND - eps
        zl1_bound_check = zl1 >= ZL1_LOWER_BOUND - eps
    return AmenabilityReport(label=table.label(),
                             order=table.group_order(),
                             k=table.k(),
                             am_za=za,
                             am_zl1=zl1,
                             is_abelian=abelian,
                             lower_bound_check=lower_bound_check,
                             zl1_bound_check=zl1_bound_check,
                             diagonal_norm=diagonal_element(table).za_norm())
