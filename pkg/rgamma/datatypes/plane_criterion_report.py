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

from typing import Dict, List, Optional, Sequence

from rgamma.symcore.poly import Poly, render


class PlaneStratum:
    """
    The rings generated by two elements, inside the affine space identified with the moduli
    space: the complement of the zero set of the t^{v_2} leading coefficient, written in the
    free coordinates.
    """
    leading_coefficient: Optional[Poly]
    description: str
    coordinate: Optional[str]

    def __init__(self, leading_coefficient: Optional[Poly], description: str, coordinate: Optional[str] = None):
        self.leading_coefficient = leading_coefficient
        self.description = description
        self.coordinate = coordinate

    def __repr__(self):
        return f"PlaneStratum({self.description})"

    def to_dict(self) -> Dict:
        return {
            "leading_coefficient": None if self.leading_coefficient is None else render(self.leading_coefficient),
            "description": self.description,
            "coordinate": self.coordinate
        }


class PlaneCriterionReport:
    """
    Outcome of the two-condition test deciding whether a semigroup is the semigroup of a
    plane branch: (i) the gcd sequence e_0 > e_1 > ... > e_g = 1 strictly decreases to 1,
    (ii) v_i > lcm(e_{i-2}, v_{i-1}) for i >= 2.
    """
    e_sequence: List[int]
    condition_i_holds: bool
    condition_ii_failures: List[int]
    stratum: Optional[PlaneStratum]

    def __init__(self, e_sequence: Sequence[int], condition_i_holds: bool, condition_ii_failures: Sequence[int]):
        self.e_sequence = list(e_sequence)
        self.condition_i_holds = condition_i_holds
        self.condition_ii_failures = list(condition_ii_failures)
        self.stratum = None

    @property
    def is_plane(self) -> bool:
        return self.condition_i_holds and not self.condition_ii_failures

    def __repr__(self):
        return f"PlaneCriterionReport(e={self.e_sequence}, plane={self.is_plane})"

    def to_dict(self) -> Dict:
        data = {
            "e_sequence": self.e_sequence,
            "condition_i_holds": self.condition_i_holds,
            "condition_ii_failures": self.condition_ii_failures,
            "is_plane": self.is_plane
        }
        if self.stratum is not None:
            data["stratum"] = self.stratum.to_dict()
        return data
