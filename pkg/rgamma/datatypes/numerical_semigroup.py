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

from typing import Dict, FrozenSet, Sequence, Tuple


class NumericalSemigroup:
    """
    A numerical semigroup given by its minimal generators v_0 < ... < v_g, with
    its conductor, its gaps and its nonzero elements below the conductor.
    Build instances with rgamma.semigroup.from_generators.
    """
    generators: Tuple[int, ...]
    conductor: int
    gaps: Tuple[int, ...]
    elements_below_c: Tuple[int, ...]
    _members: FrozenSet[int]

    def __init__(self, generators: Sequence[int], conductor: int, gaps: Sequence[int], elements_below_c: Sequence[int]):
        self.generators = tuple(generators)
        self.conductor = conductor
        self.gaps = tuple(gaps)
        self.elements_below_c = tuple(elements_below_c)
        self._members = frozenset(self.elements_below_c) | {0}

    @property
    def g(self) -> int:
        return len(self.generators) - 1

    def __contains__(self, n: int) -> bool:
        return n >= self.conductor or n in self._members

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"<{','.join(str(v) for v in self.generators)}>"

    def to_dict(self) -> Dict:
        return {
            "generators": list(self.generators),
            "conductor": self.conductor,
            "gaps": list(self.gaps),
            "elements_below_c": list(self.elements_below_c)
        }
