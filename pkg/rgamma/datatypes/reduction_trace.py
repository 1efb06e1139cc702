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

from typing import Dict, List, Optional, Sequence, Tuple

from rgamma.symcore.poly import Poly, render
from rgamma.symcore.series import Series
from rgamma.type import ReductionMode


class ReductionStep:
    """
    One removal: multiplier * (monomial series of the factorization) was subtracted to clear t^power.
    """
    power: int
    multiplier: Poly
    factorization: Tuple[int, ...]

    def __init__(self, power: int, multiplier: Poly, factorization: Sequence[int]):
        self.power = power
        self.multiplier = multiplier
        self.factorization = tuple(factorization)

    def __repr__(self):
        return f"ReductionStep(t^{self.power}, {render(self.multiplier)}, {list(self.factorization)})"

    def to_dict(self) -> Dict:
        return {"power": self.power, "multiplier": render(self.multiplier), "factorization": list(self.factorization)}


class ReductionTrace:
    reduced: Series
    steps: List[ReductionStep]
    mode: ReductionMode
    subset: Optional[Tuple[int, ...]]

    def __init__(self, reduced: Series, steps: List[ReductionStep], mode: ReductionMode = ReductionMode.FULL,
                 subset: Optional[Sequence[int]] = None):
        self.reduced = reduced
        self.steps = steps
        self.mode = mode
        self.subset = tuple(subset) if subset is not None else None

    @property
    def witness(self) -> Dict[Tuple[int, ...], Poly]:
        """
        The polynomial F = sum multiplier * x^factorization in the generator variables, as
        exponent vector -> coefficient. Each power is removed once, so no two steps share a monomial.
        """
        return {step.factorization: step.multiplier for step in self.steps}

    def __repr__(self):
        return f"ReductionTrace({self.reduced!r}, {len(self.steps)} steps)"

    def to_dict(self) -> Dict:
        data = {"reduced": self.reduced.to_dict(), "steps": [step.to_dict() for step in self.steps]}
        if self.mode == ReductionMode.SUBSET:
            data["subset"] = list(self.subset or ())
        return data
