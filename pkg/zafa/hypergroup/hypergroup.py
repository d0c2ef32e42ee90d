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

from abc import ABC, abstractmethod


class DiscreteHypergroup(ABC):
    """
    A discrete hypergroup: an index set with a
    convolution taking two points to a finitely
    supported probability vector, an identity,
    an involution and a Haar weight
    """

    def __init__(self, name):
        self._name = name

    def name(self):
        return self._name

    @abstractmethod
    def identity(self):
        """
        Returns the index of the identity
        """

    @abstractmethod
    def convolve_points(self, a, b):
        """
        Parameters
        ----------
        a, b : hashable
            Indices of the hypergroup

        Returns
        -------
        dict
            index -> coefficient of delta_a * delta_b
        """

    @abstractmethod
    def haar_weight(self, a):
        """
        Returns the Haar weight of the index a
        """

    @abstractmethod
    def involution(self, a):
        """
        Returns the index a~
        """

    @abstractmethod
    def indices(self, limit):
        """
        Returns
        -------
        list
            The first `limit` indices in enumeration
            order, all of them for finite hypergroups
        """

    def is_finite(self):
        return False

    def __repr__(self):
        return f"{type(self).__name__}({self._name})"
