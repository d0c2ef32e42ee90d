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
from .characters import chi_l

# Largest level a polynomial may carry
SUPPORT_CAP = 10000


def clebsch_gordan(l, m):
    """
    Levels of the irreducibles in pi_l x pi_m,
    each with multiplicity one

    Returns
    -------
    list of int
        |l-m|, |l-m|+2, ..., l+m
    """

    if l < 0 or m < 0:
        raise ZAFAException(f"Levels must be non-negative, got {l}, {m}")
    return list(range(abs(l - m), l + m + 1, 2))


class CentralTrigPoly:
    """
    A central trigonometric polynomial
    sum_l alpha_l chi_l on SU(2), or on SO(3)
    when only even levels are allowed
    """

    def __init__(self, coeffs, so3=False):
        """
        Parameters
        ----------
        coeffs : dict
            level -> complex coefficient
        so3 : bool
            Restrict the support to even levels

        Raises
        ------
        ZAFAException
            On negative or capped levels, or odd
            levels of an SO(3) polynomial
        """

        cleaned = {}
        for level, alpha in coeffs.items():
            level = int(level)
            if level < 0 or level > SUPPORT_CAP:
                raise ZAFAException(
                    f"Level {level} outside 0..{SUPPORT_CAP}")
            if so3 and level % 2:
                raise ZAFAException(
                    f"Odd level {level} in an SO(3) polynomial")
            alpha = complex(alpha)
            if alpha != 0:
                cleaned[level] = cleaned.get(level, 0) + alpha
        self._coeffs = dict(sorted(cleaned.items()))
        self._so3 = so3

    @staticmethod
    def character(l, so3=False):
        return CentralTrigPoly({l: 1.0}, so3=so3)

    def coeffs(self):
        return self._coeffs

    def levels(self):
        return list(self._coeffs)

    def so3(self):
        return self._so3

    def is_zero(self):
        return not self._coeffs

    def norm(self):
        """
        sum_l |alpha_l| (l + 1)
        """

        return sum(abs(alpha) * (l + 1) for l, alpha in self._coeffs.items())

    def evaluate(self, zeta):
        return sum((alpha * chi_l(l, zeta)
                    for l, alpha in self._coeffs.items()), 0j)

    def __add__(self, other):
        coeffs = dict(self._coeffs)
        for l, alpha in other.coeffs().items():
            coeffs[l] = coeffs.get(l, 0) + alpha
        return CentralTrigPoly(coeffs, so3=self._so3 and other.so3())

    def scale(self, factor):
        return CentralTrigPoly(
            {l: factor * alpha for l, alpha in self._coeffs.items()},
            so3=self._so3)

    def __repr__(self):
        group = 'SO(3)' if self._so3 else 'SU(2)'
        return f"CentralTrigPoly({group}, levels={self.levels()})"


def multiply_polys(u, v):
    """
    Pointwise product, expanded by the
    Clebsch-Gordan rule

    Parameters
    ----------
    u, v : CentralTrigPoly

    Returns
    -------
    CentralTrigPoly
        An SO(3) polynomial when both factors are
    """

    product = {}
    for l, alpha in u.coeffs().items():
        for m, beta in v.coeffs().items():
            for level in clebsch_gordan(l, m):
                product[level] = product.get(level, 0) + alpha * beta
    return CentralTrigPoly(product, so3=u.so3() and v.so3())
