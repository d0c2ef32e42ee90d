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

from fractions import Fraction

from zafa.zafa_exceptions import ZAFAException
from .hypergroup import DiscreteHypergroup

HALF = Fraction(1, 2)


class PolynomialHypergroup(DiscreteHypergroup):
    """
    N_0 with delta_n * delta_m = (delta_|n-m| + delta_(n+m)) / 2
    """

    def __init__(self):
        super().__init__("poly-n0")

    def identity(self):
        return 0

    def convolve_points(self, a, b):
        if a < 0 or b < 0:
            raise ZAFAException(f"Indices of N_0 are non-negative: {a}, {b}")
        if a == 0 or b == 0:
            return {a + b: Fraction(1)}
        return {abs(a - b): HALF, a + b: HALF}

    def haar_weight(self, a):
        return 1 if a == 0 else 2

    def involution(self, a):
        return a

    def indices(self, limit):
        return list(range(limit))
