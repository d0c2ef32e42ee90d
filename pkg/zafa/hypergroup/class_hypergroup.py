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

import numpy as np

from zafa.group.conjugacy import conjugacy_classes, class_constants
from .hypergroup import DiscreteHypergroup


class ClassHypergroup(DiscreteHypergroup):
    """
    Conj(G): the conjugacy classes with
    delta_C * delta_C' = sum_C'' a(C,C',C'') |C''| / (|C||C'|) delta_C'',
    Haar weight |C| and C -> C^-1 as involution
    """

    def __init__(self, group):
        super().__init__(f"conj({group.label()})")
        self._conjugacy = conjugacy_classes(group)
        self._constants = class_constants(group, self._conjugacy)

    def conjugacy(self):
        return self._conjugacy

    def identity(self):
        return 0

    def convolve_points(self, a, b):
        sizes = self._conjugacy.sizes()
        counts = self._constants.counts()[a, b]
        denominator = int(sizes[a]) * int(sizes[b])
        return {
            int(c): Fraction(int(counts[c]) * int(sizes[c]), denominator)
            for c in np.flatnonzero(counts)
        }

    def haar_weight(self, a):
        return int(self._conjugacy.sizes()[a])

    def involution(self, a):
        return int(self._conjugacy.inverse_class()[a])

    def indices(self, limit):
        return list(range(min(limit, self._conjugacy.num_classes())))

    def is_finite(self):
        return True
