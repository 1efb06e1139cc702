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

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from rgamma.datatypes.deceptive_binomial import DeceptiveBinomial
from rgamma.datatypes.normal_form_template import NormalFormTemplate
from rgamma.datatypes.numerical_semigroup import NumericalSemigroup
from rgamma.symcore.poly import Poly, rat_to_str, render


class Equation:
    """
    The coefficient of t^gap in the reduction of phi(source), as a polynomial in the template variables.
    """
    source: DeceptiveBinomial
    gap: int
    poly: Poly

    def __init__(self, source: DeceptiveBinomial, gap: int, poly: Poly):
        self.source = source
        self.gap = gap
        self.poly = poly

    def sort_key(self) -> Tuple:
        return self.source.sort_key() + (self.gap,)

    def label(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            return f"equation(gap {self.gap})"
        return f"equation(gap {self.gap} of {self.source.render(names)})"

    def __repr__(self):
        return f"Equation({render(self.poly)} at gap {self.gap})"

    def to_dict(self) -> Dict:
        return {"source": self.source.to_dict(with_degree=False), "gap": self.gap, "poly": render(self.poly)}


class VarietyPresentation:
    """
    The moduli space as the vanishing locus of the equations inside the affine space of
    dimension ambient_dim whose coordinates are the template variables.
    """
    semigroup: NumericalSemigroup
    template: NormalFormTemplate
    ambient_dim: int
    binomials: List[DeceptiveBinomial]
    equations: List[Equation]
    generator_names: Tuple[str, ...]

    def __init__(self, semigroup: NumericalSemigroup, template: NormalFormTemplate, ambient_dim: int,
                 binomials: Sequence[DeceptiveBinomial], equations: Sequence[Equation], generator_names: Sequence[str]):
        self.semigroup = semigroup
        self.template = template
        self.ambient_dim = ambient_dim
        self.binomials = list(binomials)
        self.equations = list(equations)
        self.generator_names = tuple(generator_names)

    def label(self, equation: Equation) -> str:
        """
        "equation(gap 15)", with the source binomial added when several equations share the gap.
        """
        shared = sum(1 for other in self.equations if other.gap == equation.gap) > 1
        return equation.label(self.generator_names if shared else None)

    def __repr__(self):
        return f"VarietyPresentation({self.semigroup!r}, {len(self.equations)} equations in {self.ambient_dim} variables)"

    def to_dict(self) -> Dict:
        return {
            "semigroup": list(self.semigroup.generators),
            "ambient_dim": self.ambient_dim,
            "variables": list(self.template.variables),
            "equations": [equation.to_dict() for equation in self.equations]
        }


class EliminationResult:
    """
    Variables solved by linear elimination, as expressions in the surviving variables, and the
    equations left when no further linear elimination applies.
    """
    solved: List[Tuple[str, Poly]]
    residual: List[Poly]
    ambient_dim: int

    def __init__(self, solved: Sequence[Tuple[str, Poly]], residual: Sequence[Poly], ambient_dim: int):
        self.solved = list(solved)
        self.residual = list(residual)
        self.ambient_dim = ambient_dim

    @property
    def affine_dim(self) -> Optional[int]:
        return self.ambient_dim - len(self.solved) if not self.residual else None

    @property
    def solved_variables(self) -> List[str]:
        return [name for name, _ in self.solved]

    def __repr__(self):
        return f"EliminationResult({len(self.solved)} solved, {len(self.residual)} residual, affine_dim={self.affine_dim})"

    def to_dict(self) -> Dict:
        return {
            "solved": [{"variable": name, "expression": render(expression)} for name, expression in self.solved],
            "residual": [render(p) for p in self.residual],
            "affine_dim": self.affine_dim
        }


class MembershipReport:
    in_variety: bool
    violated: List[str]
    values: Dict[str, Fraction]

    def __init__(self, violated: Sequence[str], values: Dict[str, Fraction]):
        self.violated = list(violated)
        self.in_variety = not self.violated
        self.values = values

    def __repr__(self):
        return f"MembershipReport(in_variety={self.in_variety}, violated={self.violated})"

    def to_dict(self) -> Dict:
        return {
            "in_variety": self.in_variety,
            "violated": list(self.violated),
            "values": {label: rat_to_str(value) for label, value in self.values.items()}
        }


class PlaneTestReport:
    is_plane_point: bool
    leading_coefficient: Fraction
    order: Optional[int]
    semigroup_is_plane: bool

    def __init__(self, is_plane_point: bool, leading_coefficient: Fraction, order: Optional[int], semigroup_is_plane: bool):
        self.is_plane_point = is_plane_point
        self.leading_coefficient = leading_coefficient
        self.order = order
        self.semigroup_is_plane = semigroup_is_plane

    def __repr__(self):
        return f"PlaneTestReport(is_plane_point={self.is_plane_point}, leading_coefficient={rat_to_str(self.leading_coefficient)})"

    def to_dict(self) -> Dict:
        return {
            "is_plane_point": self.is_plane_point,
            "leading_coefficient": rat_to_str(self.leading_coefficient),
            "order": self.order,
            "semigroup_is_plane": self.semigroup_is_plane
        }
