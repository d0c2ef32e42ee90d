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
import math
from functools import partial
from multiprocessing.pool import ThreadPool

import numpy as np

from zafa.zafa_exceptions import ZAFAException
from zafa.config.tolerances import DEFAULT_TOLERANCES
from zafa.group.group_factory import GroupFactory
from zafa.character.character_table import compute_character_table
from zafa.algebra.central_element import CentralElement, za_norm
from zafa.algebra.class_function import (to_class_function,
                                         from_class_function,
                                         expectation_residual)
from zafa.algebra.diagonal import diagonal_element
from zafa.algebra.fusion import fusion_tensor, multiply
from zafa.amenability.amenability import (am_za, product_law_residual,
                                          NON_ABELIAN_LOWER_BOUND)
from zafa.su2.characters import circle_grid
from zafa.su2.trig_poly import CentralTrigPoly
from zafa.su2.derivation import (point_derivation,
                                 finite_difference_derivation,
                                 derivation_identity_check, bound_sweep)
from zafa.hypergroup.convolution import verify_axioms
from zafa.hypergroup.hypergroup_factory import (HypergroupFactory,
                                                SIGN_MATRICES,
                                                ROTATION_MATRICES)
from zafa.record.record_aggregator import RecordAggregator
from zafa.record.residuals import (
    OrthogonalityResidual, FusionResidual, NormResidual, DiagonalResidual,
    AmenabilityBoundResidual, ProductLawResidual, DerivationResidual,
    FiniteDifferenceResidual, DerivationBoundResidual, NormalizationResidual,
    HypergroupResidual)
from zafa.output.output_table import OutputTable

logger = logging.getLogger(__name__)

DEFAULT_CATALOG = [f"Z{n}" for n in range(1, 13)] + [
    'S3', 'D4', 'Q8', 'D5', 'A4', 'S4', 'A5', 'S5', 'A6', 'S3xZ2'
]

# Factors of the product-law check are limited to this order
PRODUCT_FACTOR_LIMIT = 60

# Dual and class hypergroups are checked up to this many classes
HYPERGROUP_CLASS_LIMIT = 12

RANDOM_PAIRS = 5
DERIVATION_POINTS = 20
DERIVATION_SUPPORT = 20
FINITE_DIFFERENCE_LEVELS = 100
BOUND_LEVELS = 200
HYPERGROUP_SAMPLES = 1000
POLYNOMIAL_SUPPORT = 50
ORBIT_MATCH_SUPPORT = 20


class SuiteResult:
    """
    Residual records of one suite run,
    kept in the order the checks ran
    """

    def __init__(self, records):
        self._records = records
        self._aggregator = RecordAggregator(records)

    def records(self):
        return self._records

    def aggregator(self):
        return self._aggregator

    def total(self):
        return self._aggregator.total()

    def passed(self):
        return all(record.passed() for record in self._records)

    def failures(self):
        return [record for record in self._records if not record.passed()]

    def max_residual(self):
        """
        Largest residual over all checks, 0 for
        an empty run
        """

        return max((record.value() for record in self._records), default=0.0)

    def to_rows(self):
        return [record.to_row() for record in self._records]

    def summary_table(self):
        """
        Returns
        -------
        OutputTable
            One line per check type with the record
            count and the largest residual
        """

        table = OutputTable(
            ['Check', 'Records', 'Max Residual', 'Threshold', 'Passed'])
        maxima = self._aggregator.aggregate(reduce_func=max)
        failures = self._aggregator.failures()
        for record_type, maximum in maxima.items():
            table.add_row([
                record_type.header(),
                self._aggregator.total(record_type), maximum,
                record_type.threshold, not failures[record_type]
            ])
        return table


def _measure(record_type, subject, check):
    """
    Runs one check, turning an exception into
    an infinite residual
    """

    try:
        value = check()
    except ZAFAException as e:
        logger.warning(f"{record_type.header()} check on {subject} "
                       f"failed: {e}")
        value = math.inf
    except Exception as e:
        logger.exception(f"{record_type.header()} check on {subject} "
                         f"raised {type(e).__name__}: {e}")
        value = math.inf
    return record_type(value, subject)


def _random_element(table, rng):
    coeffs = rng.standard_normal(table.k()) + 1j * rng.standard_normal(
        table.k())
    return CentralElement(table, coeffs)


def _orthogonality(table):
    degree_defect = abs(int((table.degrees()**2).sum()) -
                        table.group_order())
    return table.orthogonality_residual() + degree_defect


def _fusion(table, tolerances):
    tensor = fusion_tensor(table, tolerances)
    return tensor.dimension_residual(
        table.degrees()) + (0 if tensor.is_symmetric() else 1)


def _norm(group, table, tolerances, seed):
    rng = np.random.default_rng(seed)
    residual = 0.0
    for _ in range(RANDOM_PAIRS):
        u = _random_element(table, rng)
        v = _random_element(table, rng)
        product = multiply(u, v, tolerances)
        residual = max(residual, za_norm(product) - za_norm(u) * za_norm(v))
        pointwise = from_class_function(
            to_class_function(u).pointwise(to_class_function(v)))
        residual = max(
            residual,
            float(np.abs(product.coeffs() - pointwise.coeffs()).max()))
        round_trip = from_class_function(to_class_function(u))
        residual = max(
            residual, float(np.abs(round_trip.coeffs() - u.coeffs()).max()))
        values = rng.standard_normal(group.order()) + 0j
        residual = max(residual, expectation_residual(group, table, u, values))
    return max(residual, 0.0)


def _diagonal(table):
    exchanged = diagonal_element(table)
    direct = exchanged.in_convention('direct')
    return max(abs(am_za(table) - exchanged.za_norm()),
               abs(exchanged.za_norm() - direct.za_norm()),
               exchanged.indicator_residual(),
               exchanged.idempotence_residual())


def _amenability_bound(table):
    value = am_za(table)
    if table.is_abelian():
        return abs(value - 1)
    return max(0.0, NON_ABELIAN_LOWER_BOUND - value)


def _group_records(name, table_fn, table_hook, tolerances, seed):
    try:
        group = GroupFactory.from_catalog(name)
        table = table_fn(group)
        if table_hook is not None:
            table = table_hook(table)
    except ZAFAException as e:
        logger.warning(f"Cannot build the table of {name}: {e}")
        return [OrthogonalityResidual(math.inf, name)]
    except Exception as e:
        logger.exception(f"Cannot build the table of {name}: "
                         f"{type(e).__name__}: {e}")
        return [OrthogonalityResidual(math.inf, name)]

    records = [
        _measure(OrthogonalityResidual, name, lambda: _orthogonality(table)),
        _measure(FusionResidual, name, lambda: _fusion(table, tolerances)),
        _measure(NormResidual, name,
                 lambda: _norm(group, table, tolerances, seed)),
        _measure(DiagonalResidual, name, lambda: _diagonal(table)),
        _measure(AmenabilityBoundResidual, name,
                 lambda: _amenability_bound(table)),
    ]
    if group.order() <= PRODUCT_FACTOR_LIMIT:
        second = GroupFactory.create_cyclic(2)
        records.append(
            _measure(
                ProductLawResidual, f"{name}xZ2",
                lambda: product_law_residual(
                    group, second, table_fn=table_fn)))
    if table.k() <= HYPERGROUP_CLASS_LIMIT:
        builders = {
            f"dual({table.label()})":
            lambda: HypergroupFactory.create_dual(table),
            f"conj({group.label()})":
            lambda: HypergroupFactory.create_class(group),
        }
        for subject, build in builders.items():
            records.extend(
                _hypergroup_records(build, subject, table.k(), seed))
    logger.info(f"Checked {name}")
    return records


def _hypergroup_records(build, name, limit, seed):
    """
    Normalization and axiom records of the hypergroup
    returned by build; a hypergroup that cannot be
    built fails both checks
    """

    residuals = {}

    def axioms():
        residuals.update(
            verify_axioms(build(),
                          limit=limit,
                          samples=HYPERGROUP_SAMPLES,
                          seed=seed))
        return residuals['normalization']

    normalization = _measure(NormalizationResidual, name, axioms)
    others = HypergroupResidual(
        max((v for k, v in residuals.items() if k != 'normalization'),
            default=math.inf), name)
    return [normalization, others]


def _orbit_matches_polynomial():
    orbit = HypergroupFactory.create_orbit(1, SIGN_MATRICES)
    polynomial = HypergroupFactory.create_polynomial()
    deviation = 0.0
    for n in range(ORBIT_MATCH_SUPPORT + 1):
        for m in range(ORBIT_MATCH_SUPPORT + 1):
            expected = polynomial.convolve_points(n, m)
            actual = {
                abs(index[0]): weight
                for index, weight in orbit.convolve_points(
                    orbit.representative((n, )),
                    orbit.representative((m, ))).items()
            }
            keys = set(expected) | set(actual)
            deviation = max(
                [deviation] +
                [float(abs(expected.get(i, 0) - actual.get(i, 0)))
                 for i in keys])
    return deviation


def _su2_records(seed):
    rng = np.random.default_rng(seed)
    points = circle_grid(DERIVATION_POINTS, min_imag=0.1)
    subject = 'SU(2)'

    def identity():
        deviation = 0.0
        for point in points:
            u, v = (CentralTrigPoly({
                int(l): complex(*rng.standard_normal(2))
                for l in rng.choice(2 * DERIVATION_SUPPORT,
                                    size=DERIVATION_SUPPORT,
                                    replace=False)
            }) for _ in range(2))
            deviation = max(deviation,
                            derivation_identity_check(point, u, v))
        return deviation

    def finite_differences():
        error = 0.0
        for point in points:
            for l in range(FINITE_DIFFERENCE_LEVELS + 1):
                u = CentralTrigPoly.character(l)
                exact = point_derivation(point, u)
                approximate = finite_difference_derivation(point, u)
                error = max(error,
                            abs(exact - approximate) / max(abs(exact), 1.0))
        return error

    def bounds():
        rows = bound_sweep(range(BOUND_LEVELS + 1), points)
        return max(max(0.0, -row['slack'] / row['bound']) for row in rows)

    def so3_nontrivial():
        # D_z chi_2 must not vanish on the sampled points
        smallest = min(
            abs(point_derivation(point, CentralTrigPoly.character(2,
                                                                  so3=True)))
            for point in points)
        return 0.0 if smallest > 0 else math.inf

    return [
        _measure(DerivationResidual, subject, identity),
        _measure(FiniteDifferenceResidual, subject, finite_differences),
        _measure(DerivationBoundResidual, subject, bounds),
        _measure(DerivationResidual, 'SO(3)', so3_nontrivial),
    ]


def _infinite_hypergroup_records(seed):
    records = []
    for hypergroup, limit in (
        (HypergroupFactory.create_polynomial(), POLYNOMIAL_SUPPORT),
        (HypergroupFactory.create_orbit(1, SIGN_MATRICES, 'Z/{+-1}'), 21),
        (HypergroupFactory.create_orbit(2, ROTATION_MATRICES, 'Z2/C4'), 25),
    ):
        records.extend(
            _hypergroup_records(lambda: hypergroup, hypergroup.name(), limit,
                                seed))
    records.append(
        _measure(HypergroupResidual, 'Z/{+-1} vs poly-n0',
                 _orbit_matches_polynomial))
    return records


def verify_suite(catalog=None,
                 table_fn=None,
                 table_hook=None,
                 tolerances=DEFAULT_TOLERANCES,
                 seed=0,
                 workers=1):
    """
    Runs the cross-module checks on a catalog:
    orthogonality, fusion, norm, diagonal,
    amenability bound and product law per group,
    hypergroup axioms of each dual and class
    hypergroup, and the SU(2) derivation and
    infinite hypergroup checks once per run.

    Parameters
    ----------
    catalog : list of str
        Catalog group names, DEFAULT_CATALOG when None
    table_fn : callable
        Maps a group to its character table
    table_hook : callable
        Applied to every table before checking;
        used to inject corrupted tables
    tolerances : Tolerances
    seed : int
    workers : int
        Number of groups checked concurrently

    Returns
    -------
    SuiteResult
        Failed checks are records above their
        threshold, never exceptions
    """

    if catalog is None:
        catalog = DEFAULT_CATALOG
    if not catalog:
        logger.info("Empty catalog, nothing to verify")
        return SuiteResult([])
    if table_fn is None:
        table_fn = partial(compute_character_table,
                           seed=seed,
                           tolerances=tolerances)

    check = partial(_group_records,
                    table_fn=table_fn,
                    table_hook=table_hook,
                    tolerances=tolerances,
                    seed=seed)
    with ThreadPool(workers) as pool:
        per_group = pool.map(check, catalog)

    records = [record for group_records in per_group
               for record in group_records]
    records.extend(_su2_records(seed))
    records.extend(_infinite_hypergroup_records(seed))
    result = SuiteResult(records)
    logger.info(f"Ran {result.total()} checks, "
                f"{len(result.failures())} failed")
    return result
