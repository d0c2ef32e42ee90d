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

from .record import Record


class ResidualRecord(Record):
    """
    The residual of one verification check.
    A check passes when the residual does not
    exceed the threshold of its record type.
    """

    threshold = 0.0

    def passed(self):
        return self.value() <= self.threshold

    def to_row(self):
        return {
            'check': self.header(),
            'subject': self.subject(),
            'residual': self.value(),
            'threshold': self.threshold,
            'passed': self.passed(),
        }


class OrthogonalityResidual(ResidualRecord):
    """
    Row and column orthogonality of a character
    table, plus the squared-degree sum
    """

    threshold = 1e-9

    @staticmethod
    def header():
        return "Orthogonality"


class FusionResidual(ResidualRecord):
    """
    Integer violation of the fusion dimension
    identity or of fusion symmetry
    """

    threshold = 0

    @staticmethod
    def header():
        return "Fusion Dimension"


class NormResidual(ResidualRecord):
    """
    Submultiplicativity excess, transform round
    trips and product agreement of ZA(G)
    """

    threshold = 1e-9

    @staticmethod
    def header():
        return "ZA Norm"


class DiagonalResidual(ResidualRecord):
    """
    Deviation between the amenability constant
    and the diagonal norm, and of the diagonal
    from an idempotent indicator
    """

    threshold = 1e-9

    @staticmethod
    def header():
        return "Diagonal"


class AmenabilityBoundResidual(ResidualRecord):
    """
    Shortfall of AM(ZA(G)) below 2/sqrt(3) for
    non-abelian groups, distance from 1 for
    abelian groups
    """

    threshold = 1e-9

    @staticmethod
    def header():
        return "Amenability Bound"


class ProductLawResidual(ResidualRecord):
    threshold = 1e-6

    @staticmethod
    def header():
        return "Product Law"


class DerivationResidual(ResidualRecord):
    """
    Deviation from D(uv) = u(z)D(v) + D(u)v(z)
    """

    threshold = 1e-8

    @staticmethod
    def header():
        return "Derivation Identity"


class FiniteDifferenceResidual(ResidualRecord):
    """
    Relative error between D_z and circle
    finite differences
    """

    threshold = 1e-6

    @staticmethod
    def header():
        return "Derivation Finite Difference"


class DerivationBoundResidual(ResidualRecord):
    """
    Relative excess of |D_z chi_l| over
    (4l+4)/|z-z^-1|^2
    """

    threshold = 1e-12

    @staticmethod
    def header():
        return "Derivation Bound"


class NormalizationResidual(ResidualRecord):
    """
    Distance of convolution weight sums from 1
    """

    threshold = 1e-12

    @staticmethod
    def header():
        return "Hypergroup Normalization"


class HypergroupResidual(ResidualRecord):
    """
    Non-negativity, unit, Haar weight and
    associativity of a hypergroup
    """

    threshold = 1e-10

    @staticmethod
    def header():
        return "Hypergroup Axioms"
