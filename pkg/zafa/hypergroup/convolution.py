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

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 1000


def ell1_convolve(hypergroup, f, g):
    """
    Convolution of the hypergroup algebra l1(H),
    the bilinear extension of the point
    convolution

    Parameters
    ----------
    hypergroup : DiscreteHypergroup
    f, g : dict
        Finitely supported index -> coefficient maps

    Returns
    -------
    dict
    """

    result = {}
    for a, alpha in f.items():
        if alpha == 0:
            continue
        for b, beta in g.items():
            if beta == 0:
                continue
            for c, weight in hypergroup.convolve_points(a, b).items():
                result[c] = result.get(c, 0) + alpha * beta * weight
    return result


def ell1_norm(f):
    return float(sum(abs(v) for v in f.values()))


def sup_distance(f, g):
    keys = set(f) | set(g)
    return max((float(abs(f.get(key, 0) - g.get(key, 0))) for key in keys),
               default=0.0)


def verify_axioms(hypergroup, limit=50, samples=DEFAULT_SAMPLES, seed=0):
    """
    Measures the hypergroup axioms on the first
    `limit` indices: probability normalization,
    non-negativity and the unit on all pairs,
    the Haar weight on every index, and
    associativity on sampled triples.

    Parameters
    ----------
    hypergroup : DiscreteHypergroup
    limit : int
        Number of indices taken into account
    samples : int
        Number of sampled triples
    seed : int

    Returns
    -------
    dict
        Residual per axiom, all zero up to
        rounding for a valid hypergroup
    """

    indices = hypergroup.indices(limit)
    identity = hypergroup.identity()
    normalization = 0.0
    negativity = 0.0
    for a in indices:
        for b in indices:
            weights = hypergroup.convolve_points(a, b).values()
            normalization = max(normalization,
                                abs(float(sum(weights)) - 1.0))
            negativity = max(negativity, -float(min(weights)))

    unit = max((sup_distance(hypergroup.convolve_points(identity, a),
                             {a: 1}) for a in indices),
               default=0.0)
    haar = 0.0
    for a in indices:
        at_identity = hypergroup.convolve_points(
            a, hypergroup.involution(a)).get(identity, 0)
        haar = max(haar,
                   abs(float(hypergroup.haar_weight(a) * at_identity) - 1.0))

    rng = np.random.default_rng(seed)
    associativity = 0.0
    for i, j, k in rng.integers(0, len(indices), size=(samples, 3)):
        a, b, c = indices[i], indices[j], indices[k]
        left = ell1_convolve(hypergroup, hypergroup.convolve_points(a, b),
                             {c: 1})
        right = ell1_convolve(hypergroup, {a: 1},
                              hypergroup.convolve_points(b, c))
        associativity = max(associativity, sup_distance(left, right))

    residuals = {
        'normalization': normalization,
        'negativity': negativity,
        'identity': unit,
        'haar': haar,
        'associativity': associativity,
    }
    logger.debug(f"Axiom residuals of {hypergroup.name()}: {residuals}")
    return residuals


def is_point_mass_hypergroup(hypergroup, limit=50):
    """
    True if every convolution of two points is a
    single point, i.e. the hypergroup is a group
    """

    indices = hypergroup.indices(limit)
    return all(
        len(hypergroup.convolve_points(a, b)) == 1 for a in indices
        for b in indices)
