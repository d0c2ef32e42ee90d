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
from zafa.algebra.fusion import fusion_tensor
from .hypergroup import DiscreteHypergroup


class DualHypergroup(DiscreteHypergroup):
    """
    l1(G^, d^2): the irreducibles of a finite
    group with the fusion convolution, Haar weight
    d^2 and complex conjugation as involution
    """

    def __init__(self, table, tolerances=DEFAULT_TOLERANCES):
        super().__init__(f"dual({table.label()})")
        self._table = table
        self._coefficients = fusion_tensor(
            table, tolerances).convolution_coefficients(table.degrees())

    def table(self):
        return self._table

    def identity(self):
        return 0

    def convolve_points(self, a, b):
        row = self._coefficients[a, b]
        return {int(sigma): float(row[sigma]) for sigma in np.flatnonzero(row)}

    def haar_weight(self, a):
        return int(self._table.degrees()[a])**2

    def involution(self, a):
        return int(self._table.conjugate_rows()[a])

    def indices(self, limit):
        return list(range(min(limit, self._table.k())))

    def is_finite(self):
        return True
