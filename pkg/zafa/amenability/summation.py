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
def _neumaier_add(total, compensation, term):
    updated = total + term
    if abs(total) >= abs(term):
        compensation += (total - updated) + term
    else:
        compensation += (term - updated) + total
    return updated, compensation


@njit(cache=True)
def compensated_sum(terms):
    """
    Neumaier sum of a 1-D float array,
    accumulated in index order
    """

    total = 0.0
    compensation = 0.0
    for i in range(terms.shape[0]):
        total, compensation = _neumaier_add(total, compensation, terms[i])
    return total + compensation


@njit(cache=True)
def weighted_pair_sums(values, weights):
    """
    S[a, b] = sum_j weights[j] values[a, j] conj(values[b, j])
    with the real and imaginary parts summed
    separately by Neumaier summation
    """

    rows, columns = values.shape
    out = np.zeros((rows, rows), dtype=np.complex128)
    for a in range(rows):
        for b in range(rows):
            re = 0.0
            re_comp = 0.0
            im = 0.0
            im_comp = 0.0
            for j in range(columns):
                term = weights[j] * values[a, j] * values[b, j].conjugate()
                re, re_comp = _neumaier_add(re, re_comp, term.real)
                im, im_comp = _neumaier_add(im, im_comp, term.imag)
            out[a, b] = (re + re_comp) + 1j * (im + im_comp)
    return out
