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

from typing import Dict, Optional, Sequence, Tuple

from rgamma.exceptions.exceptions import InvalidValueException


def _monomial_text(exponents: Sequence[int], names: Sequence[str]) -> str:
    factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, exponents) if e]
    return "*".join(factors) if factors else "1"


class GenMonomial:
    """
    A monomial x_0^{i_0} ... x_g^{i_g} in the generator variables, x_j having weight v_j.
    """
    exponents: Tuple[int, ...]
    weighted_degree: int

    def __init__(self, exponents: Sequence[int], weights: Sequence[int]):
        self.exponents = tuple(exponents)
        self.weighted_degree = sum(i * v for i, v in zip(self.exponents, weights))

    def __eq__(self, other):
        return isinstance(other, GenMonomial) and self.exponents == other.exponents

    def __lt__(self, other: 'GenMonomial'):
        return self.exponents < other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"GenMonomial({list(self.exponents)}, degree={self.weighted_degree})"


class DeceptiveBinomial:
    """
    x^lhs - x^rhs with both monomials of the same weighted degree.
    """
    lhs: GenMonomial
    rhs: GenMonomial
    degree: int

    def __init__(self, lhs: GenMonomial, rhs: GenMonomial):
        if lhs.weighted_degree != rhs.weighted_degree or lhs == rhs:
            raise InvalidValueException("binomial", f"{lhs!r} - {rhs!r}", "(the monomials must differ and share their weighted degree)")
        self.lhs = lhs
        self.rhs = rhs
        self.degree = lhs.weighted_degree

    @property
    def is_oriented(self) -> bool:
        """
        At the first index where the exponents differ, lhs has the smaller entry.
        """
        return self.lhs.exponents < self.rhs.exponents

    def oriented(self) -> 'DeceptiveBinomial':
        return self if self.is_oriented else DeceptiveBinomial(self.rhs, self.lhs)

    def sort_key(self) -> Tuple:
        return self.degree, self.lhs.exponents, self.rhs.exponents

    def render(self, names: Sequence[str]) -> str:
        return f"{_monomial_text(self.lhs.exponents, names)} - {_monomial_text(self.rhs.exponents, names)}"

    def __eq__(self, other):
        return isinstance(other, DeceptiveBinomial) and self.lhs == other.lhs and self.rhs == other.rhs

    def __hash__(self):
        return hash((self.lhs, self.rhs))

    def __repr__(self):
        return f"DeceptiveBinomial({list(self.lhs.exponents)} - {list(self.rhs.exponents)}, degree={self.degree})"

    def to_dict(self, with_degree: bool = True) -> Dict:
        data: Dict = {"lhs": list(self.lhs.exponents), "rhs": list(self.rhs.exponents)}
        if with_degree:
            data["degree"] = self.degree
        return data


class ThreeGenIdecGenerators:
    """
    For <v_0, v_1, v_2>: f1 = x^{k0} - y^{m0} z^{m1}, f2 = y^{k1} - x^{n0} z^{n1},
    f3 = z^{k2} - x^{p0} y^{p1}, each k the smallest positive multiple admitting a cofactor.
    Among cofactors for the minimal k, the one with the smallest last coordinate is kept.
    """
    k0: int
    k1: int
    k2: int
    m0: int
    m1: int
    n0: int
    n1: int
    p0: int
    p1: int
    f1: DeceptiveBinomial
    f2: DeceptiveBinomial
    f3: DeceptiveBinomial

    def __init__(self, weights: Sequence[int], ks: Sequence[int], cofactors: Sequence[Tuple[int, int]]):
        self.k0, self.k1, self.k2 = ks
        (self.m0, self.m1), (self.n0, self.n1), (self.p0, self.p1) = cofactors
        self.f1 = DeceptiveBinomial(GenMonomial((self.k0, 0, 0), weights), GenMonomial((0, self.m0, self.m1), weights))
        self.f2 = DeceptiveBinomial(GenMonomial((0, self.k1, 0), weights), GenMonomial((self.n0, 0, self.n1), weights))
        self.f3 = DeceptiveBinomial(GenMonomial((0, 0, self.k2), weights), GenMonomial((self.p0, self.p1, 0), weights))

    @property
    def binomials(self) -> Tuple[DeceptiveBinomial, DeceptiveBinomial, DeceptiveBinomial]:
        return self.f1, self.f2, self.f3

    def __repr__(self):
        return f"ThreeGenIdecGenerators(k=({self.k0}, {self.k1}, {self.k2}))"

    def to_dict(self, conductor: Optional[int] = None) -> Dict:
        data: Dict = {
            "k": [self.k0, self.k1, self.k2],
            "cofactors": [[self.m0, self.m1], [self.n0, self.n1], [self.p0, self.p1]],
            "binomials": [f.to_dict() for f in self.binomials],
        }
        if conductor is not None:
            data["below_conductor"] = [f.degree < conductor for f in self.binomials]
        return data
