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
from zafa.output.report_document import complex_pair
from .characters import CirclePoint
from .trig_poly import CentralTrigPoly, multiply_polys

logger = logging.getLogger(__name__)

DEFAULT_STEP = 1e-5


def _check_point(z):
    if not isinstance(z, CirclePoint):
        z = CirclePoint(z)
    if not z.is_upper():
        raise ZAFAException(
            f"derivation undefined on the real-eigenvalue locus: {z}")
    return z


def derivation_of_character(l, z):
    """
    D_z chi_l =
    (l (z^(l+2) - z^-(l+2)) - (l+2)(z^l - z^-l)) / (z - z^-1)^2
    """

    return (l * (z**(l + 2) - z**(-l - 2)) - (l + 2) *
            (z**l - z**(-l))) / (z - 1 / z)**2


def point_derivation(z, u):
    """
    The bounded point derivation
    D_z u = z d/dzeta u(C_zeta) at zeta = z

    Parameters
    ----------
    z : CirclePoint
        Im z > 0
    u : CentralTrigPoly

    Returns
    -------
    complex

    Raises
    ------
    ZAFAException
        If Im z <= 0
    """

    z = _check_point(z).z()
    return sum((alpha * derivation_of_character(l, z)
                for l, alpha in u.coeffs().items()), 0j)


def derivation_bound(z, u):
    """
    4 ||u|| / |z - z^-1|^2
    """

    return 4 * u.norm() / _check_point(z).separation()


def weight_sum_derivation(z, u):
    """
    D_z u from the weights of each level:
    sum_l alpha_l sum_k (l - 2k) z^(l-2k)
    """

    z = _check_point(z).z()
    total = 0j
    for l, alpha in u.coeffs().items():
        weights = (l - 2 * np.arange(l + 1)).astype(np.float64)
        total += alpha * complex(np.sum(weights * np.power(z, weights)))
    return total


def finite_difference_derivation(z, u, step=DEFAULT_STEP):
    """
    D_z u from central differences of
    t -> u(C_{z e^{it}}), Richardson extrapolated.
    Along the circle d/dt = i zeta d/dzeta.
    """

    z = _check_point(z)

    def central(h):
        forward = u.evaluate(z.rotated(h))
        backward = u.evaluate(z.rotated(-h))
        return -1j * (forward - backward) / (2 * h)

    return (4 * central(step / 2) - central(step)) / 3


def derivation_identity_check(z, u, v):
    """
    |D(uv) - u(z) D(v) - D(u) v(z)|

    Returns
    -------
    float
    """

    z_value = _check_point(z).z()
    product = multiply_polys(u, v)
    lhs = point_derivation(z, product)
    rhs = u.evaluate(z_value) * point_derivation(z, v) + point_derivation(
        z, u) * v.evaluate(z_value)
    return abs(lhs - rhs)


def bound_sweep(levels, points):
    """
    Rows (l, z, |D_z chi_l|, bound, slack) for
    every level and circle point

    Parameters
    ----------
    levels : iterable of int
    points : list of CirclePoint

    Returns
    -------
    list of dict
    """

    rows = []
    for point in points:
        _check_point(point)
        separation = point.separation()
        for l in levels:
            magnitude = abs(
                point_derivation(point, CentralTrigPoly.character(l)))
            bound = (4 * l + 4) / separation
            rows.append({
                'l': int(l),
                'z': complex_pair(point.z()),
                'abs_derivation': magnitude,
                'bound': bound,
                'slack': bound - magnitude,
            })
    violations = sum(1 for row in rows if row['slack'] < 0)
    if violations:
        logger.warning(f"{violations} derivation bound violations in sweep")
    return rows
