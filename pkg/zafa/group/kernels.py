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
from numba import njit


@njit(cache=True)
def conjugacy_labels(table, inverse):
    """
    Labels every element by its conjugation orbit.
    Orbits are numbered in order of their smallest
    element.
    """

    n = table.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    count = 0
    for x in range(n):
        if labels[x] >= 0:
            continue
        for g in range(n):
            labels[table[table[g, x], inverse[g]]] = count
        count += 1
    return labels


@njit(cache=True)
def tally_class_constants(class_of, quotients, num_classes):
    """
    quotients[x, c] holds x^-1 z_c. Each x in C_i
    with x^-1 z_c in C_j is one pair (x, y) in
    C_i x C_j with xy = z_c.
    """

    n = quotients.shape[0]
    counts = np.zeros((num_classes, num_classes, num_classes),
                      dtype=np.int64)
    for c in range(num_classes):
        for x in range(n):
            counts[class_of[x], class_of[quotients[x, c]], c] += 1
    return counts
