# This file is part of rgamma-moduli.
# Copyright 2026 rgamma-moduli contributors
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

"""
The full pipeline for one semigroup, and the randomized comparison of the defining equations
against the brute-force closure.
"""
import logging
import random
from typing import Optional

from rgamma.datatypes.analysis_report import AnalysisReport, SelfCheckReport
from rgamma.datatypes.numerical_semigroup import NumericalSemigroup
from rgamma.datatypes.variety_presentation import EliminationResult, VarietyPresentation
from rgamma.deceptive import idec_generators_3gen
from rgamma.exceptions.exceptions import InvalidValueException
from rgamma.oracle import verify_point
from rgamma.semigroup import ambient_dimension, is_plane_semigroup
from rgamma.variety import defining_equations, eliminate_linear, membership, plane_stratum, predicted_dim_single_binomial, \
    sample_point

logger = logging.getLogger(__name__)

DEFAULT_SELF_CHECK_POINTS = 10


def self_check(presentation: VarietyPresentation, elimination: EliminationResult, seed: int,
               points: int = DEFAULT_SELF_CHECK_POINTS) -> SelfCheckReport:
    """
    Samples points, half of them forced onto the variety and half shifted off it (when any
    variable was solved), and compares membership with the brute-force closure at each.

    @param presentation: the defining equations
    @type presentation: VarietyPresentation
    @param elimination: a complete elimination of the equations
    @type elimination: EliminationResult
    @param seed: seed of the sampling
    @type seed: int
    @param points: number of points
    @type points: int
    @return: the comparison
    @rtype: SelfCheckReport
    """
    if elimination.affine_dim is None:
        raise InvalidValueException("elimination", repr(elimination), "(the self check needs a complete elimination)")
    rng = random.Random(seed)
    semigroup = presentation.semigroup
    disagreements = []
    on_count = 0
    for k in range(points):
        on_variety = k % 2 == 0 or not elimination.solved
        point = sample_point(presentation, elimination, rng, on_variety)
        expected = membership(semigroup, point, presentation).in_variety
        observed = verify_point(semigroup, point, presentation.template)
        on_count += int(expected)
        if expected != observed:
            logger.warning("%r: equations say %s, closure says %s at %r", semigroup, expected, observed, point)
            disagreements.append({"point": point.to_dict(), "equations": expected, "oracle": observed})
    return SelfCheckReport(seed, points, on_count, disagreements)


def analyze(semigroup: NumericalSemigroup, seed: Optional[int] = None) -> AnalysisReport:
    """
    Everything known about the moduli space of a semigroup: its defining equations, their
    elimination and, for three generators, the deceptive ideal generators and the plane stratum.
    """
    presentation = defining_equations(semigroup)
    elimination = eliminate_linear(presentation)
    criterion = is_plane_semigroup(semigroup)
    if len(semigroup.generators) == 3 and (elimination.affine_dim is not None or not criterion.is_plane):
        criterion.stratum = plane_stratum(semigroup, elimination, presentation.template)
    report = AnalysisReport(
        semigroup=semigroup,
        ambient_dim=ambient_dimension(semigroup),
        plane_criterion=criterion,
        presentation=presentation,
        elimination=elimination,
        predicted_dim=predicted_dim_single_binomial(semigroup),
        idec_generators=idec_generators_3gen(semigroup) if len(semigroup.generators) == 3 else None
    )
    if seed is not None and elimination.affine_dim is not None:
        report.self_check = self_check(presentation, elimination, seed)
    return report
