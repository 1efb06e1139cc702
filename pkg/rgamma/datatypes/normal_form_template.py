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
from typing import Dict, List, Mapping, Sequence, Tuple

from sympy.polys.rings import PolyRing

from rgamma.datatypes.numerical_semigroup import NumericalSemigroup
from rgamma.exceptions.exceptions import UnknownVariableException
from rgamma.symcore.poly import rat_to_str
from rgamma.symcore.series import Series, render_series


class NormalFormTemplate:
    """
    The symbolic normal-form generators x_i(t) = t^{v_i} + sum var(i, delta) t^delta of a
    semigroup, delta running over the gaps above v_i, together with the coordinates of the
    ambient affine space they define.
    """
    semigroup: NumericalSemigroup
    modulus: int
    ring: PolyRing
    generators: List[Series]
    variables: List[str]
    canonical_names: List[str]
    slots: List[Tuple[int, int]]
    _lookup: Dict[str, str]

    def __init__(self, semigroup: NumericalSemigroup, modulus: int, ring: PolyRing, generators: Sequence[Series],
                 variables: Sequence[str], canonical_names: Sequence[str], slots: Sequence[Tuple[int, int]]):
        self.semigroup = semigroup
        self.modulus = modulus
        self.ring = ring
        self.generators = list(generators)
        self.variables = list(variables)
        self.canonical_names = list(canonical_names)
        self.slots = list(slots)
        self._lookup = {}
        for display, canonical in zip(self.variables, self.canonical_names):
            self._lookup[display] = display
            self._lookup[canonical] = display

    def resolve(self, name: str) -> str:
        """
        @param name: a display alias (a5) or a canonical name (g0d5)
        @type name: str
        @return: the display name used by the template's polynomial ring
        @rtype: str
        """
        try:
            return self._lookup[name.strip()]
        except KeyError as e:
            raise UnknownVariableException(name, self.variables) from e

    def slot_of(self, name: str) -> Tuple[int, int]:
        return self.slots[self.variables.index(self.resolve(name))]

    def __repr__(self):
        return f"NormalFormTemplate({self.semigroup!r}: " + "; ".join(render_series(s) for s in self.generators) + ")"

    def to_dict(self) -> Dict:
        generators = []
        for i, v in enumerate(self.semigroup.generators):
            terms = [{"exp": delta, "var": name} for name, (j, delta) in zip(self.variables, self.slots) if j == i]
            entry = {"lead": v, "terms": terms}
            if self.generators[i].is_zero():
                entry["vanishes"] = True
            generators.append(entry)
        return {"generators": generators, "variables": list(self.variables)}


class CoefficientPoint:
    """
    A rational point of the ambient affine space: a value for every template variable,
    keyed by display name.
    """
    assignment: Dict[str, Fraction]

    def __init__(self, assignment: Mapping[str, Fraction]):
        self.assignment = dict(assignment)

    def __getitem__(self, name: str) -> Fraction:
        return self.assignment[name]

    def __contains__(self, name: str) -> bool:
        return name in self.assignment

    def __repr__(self):
        return "CoefficientPoint(" + ", ".join(f"{k}={rat_to_str(v)}" for k, v in self.assignment.items()) + ")"

    def to_dict(self) -> Dict:
        return {k: rat_to_str(v) for k, v in self.assignment.items()}
