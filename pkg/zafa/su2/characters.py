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

import cmath
import math

import numpy as np

from zafa.zafa_exceptions import ZAFAException

CIRCLE_TOLERANCE = 1e-12

# Distance to +-1 below which the closed form is singular
SINGULAR_THRESHOLD = 1e-6


class CirclePoint:
    """
    A point zeta of the unit circle, the
    conjugacy parameter of SU(2) elements with
    eigenvalues zeta and zeta^-1
    """

    def __init__(self, z, tolerance=CIRCLE_TOLERANCE):
        z = complex(z)
        if abs(abs(z) - 1) > tolerance:
            raise ZAFAException(f"{z} is not on the unit circle")
        self._z = z

    @staticmethod
    def from_angle(theta):
        return CirclePoint(cmath.exp(1j * theta))

    def z(self):
        return self._z

    def angle(self):
        return cmath.phase(self._z)

    def is_upper(self):
        return self._z.imag > 0

    def separation(self):
        """
        |z - z^-1|^2
        """

        return abs(self._z - 1 / self._z)**2

    def rotated(self, t):
        return CirclePoint(self._z * cmath.exp(1j * t))

    def __repr__(self):
        return f"CirclePoint({self._z.real:.6g}{self._z.imag:+.6g}j)"


def _as_complex(zeta):
    return zeta.z() if isinstance(zeta, CirclePoint) else complex(zeta)


def chi_finite_sum(l, zeta):
    z = _as_complex(zeta)
    exponents = l - 2 * np.arange(l + 1)
    return complex(np.sum(np.power(z, exponents.astype(np.float64))))


def chi_closed_form(l, zeta):
    z = _as_complex(zeta)
    return (z**(l + 1) - z**(-l - 1)) / (z - 1 / z)


def chi_l(l, zeta):
    """
    The character of the (l+1)-dimensional
    irreducible of SU(2) on the class of zeta:
    sum_{k=0}^{l} zeta^(l-2k)

    Parameters
    ----------
    l : int
        Level, l >= 0
    zeta : CirclePoint or complex

    Returns
    -------
    complex
    """

    if l < 0:
        raise ZAFAException(f"Level must be non-negative, got {l}")
    z = _as_complex(zeta)
    if abs(z - 1) < SINGULAR_THRESHOLD or abs(z + 1) < SINGULAR_THRESHOLD:
        return chi_finite_sum(l, z)
    return chi_closed_form(l, z)


def circle_grid(count, min_imag=0.1):
    """
    Evenly spaced points of the upper circle
    with Im z > min_imag

    Parameters
    ----------
    count : int
    min_imag : float
        In [0, 1)

    Returns
    -------
    list of CirclePoint
    """

    if count < 1:
        return []
    if not 0 <= min_imag < 1:
        raise ZAFAException(f"min_imag must lie in [0, 1), got {min_imag}")
    low = math.asin(min_imag)
    angles = np.linspace(low, math.pi - low, count + 2)[1:-1]
    return [CirclePoint.from_angle(float(theta)) for theta in angles]
