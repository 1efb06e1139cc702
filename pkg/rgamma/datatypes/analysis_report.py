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

from typing import Dict, List, Optional

from rgamma.datatypes.deceptive_binomial import DeceptiveBinomial, ThreeGenIdecGenerators
from rgamma.datatypes.normal_form_template import NormalFormTemplate
from rgamma.datatypes.numerical_semigroup import NumericalSemigroup
from rgamma.datatypes.plane_criterion_report import PlaneCriterionReport
from rgamma.datatypes.variety_presentation import EliminationResult, VarietyPresentation


class SelfCheckReport:
    """
    Agreement between equation evaluation and the brute-force closure on sampled points.
    """
    seed: int
    checked: int
    on_variety: int
    disagreements: List[Dict]

    def __init__(self, seed: int, checked: int, on_variety: int, disagreements: List[Dict]):
        self.seed = seed
        self.checked = checked
        self.on_variety = on_variety
        self.disagreements = disagreements

    @property
    def passed(self) -> bool:
        return not self.disagreements

    def __repr__(self):
        return f"SelfCheckReport(seed={self.seed}, checked={self.checked}, passed={self.passed})"

    def to_dict(self) -> Dict:
        return {
            "seed": self.seed,
            "checked": self.checked,
            "on_variety": self.on_variety,
            "passed": self.passed,
            "disagreements": self.disagreements
        }


class AnalysisReport:
    semigroup: NumericalSemigroup
    ambient_dim: int
    plane_criterion: PlaneCriterionReport
    template: NormalFormTemplate
    binomials: List[DeceptiveBinomial]
    presentation: VarietyPresentation
    elimination: EliminationResult
    predicted_dim: Optional[int]
    idec_generators: Optional[ThreeGenIdecGenerators]
    self_check: Optional[SelfCheckReport]

    def __init__(self, semigroup: NumericalSemigroup, ambient_dim: int, plane_criterion: PlaneCriterionReport,
                 presentation: VarietyPresentation, elimination: EliminationResult, predicted_dim: Optional[int],
                 idec_generators: Optional[ThreeGenIdecGenerators] = None, self_check: Optional[SelfCheckReport] = None):
        self.semigroup = semigroup
        self.ambient_dim = ambient_dim
        self.plane_criterion = plane_criterion
        self.presentation = presentation
        self.template = presentation.template
        self.binomials = presentation.binomials
        self.elimination = elimination
        self.predicted_dim = predicted_dim
        self.idec_generators = idec_generators
        self.self_check = self_check

    def __repr__(self):
        return f"AnalysisReport({self.semigroup!r}, affine_dim={self.elimination.affine_dim})"

    def to_dict(self) -> Dict:
        summary = self.semigroup.to_dict()
        summary["ambient_dim"] = self.ambient_dim
        presentation = self.presentation.to_dict()
        presentation["elimination"] = self.elimination.to_dict()
        data = {
            "semigroup": summary,
            "plane_criterion": self.plane_criterion.to_dict(),
            "template": self.template.to_dict(),
            "sdec": [binomial.to_dict() for binomial in self.binomials],
            "presentation": presentation,
            "predicted_dim": self.predicted_dim
        }
        if self.idec_generators is not None:
            data["idec_generators"] = self.idec_generators.to_dict(self.semigroup.conductor)
        if self.self_check is not None:
            data["self_check"] = self.self_check.to_dict()
        return data
