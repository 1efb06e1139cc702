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
Deceptive binomials: the oriented binomials x^i - x^i' of equal weighted degree below the
conductor, and the three binomials generating the deceptive ideal of a three-generator
semigroup.
"""
import logging
from collections import defaultdict
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from sympy.polys.rings import PolyRing

from rgamma.datatypes.deceptive_binomial import DeceptiveBinomial, GenMonomial, ThreeGenIdecGenerators
from rgamma.datatypes.numerical_semigroup import NumericalSemigroup
from rgamma.exceptions.exceptions import ArityMismatchException, WrongGeneratorCountException, ZeroPolynomialException
from rgamma.symcore.poly import Poly, poly_ring

logger = logging.getLogger(__name__)

_SHORT_NAMES = ("x", "y", "z", "w")


def generator_names(semigroup: NumericalSemigroup) -> Tuple[str, ...]:
    count = len(semigroup.generators)
    if count <= len(_SHORT_NAMES):
        return _SHORT_NAMES[:count]
    return tuple(f"x{i}" for i in range(count))


def generator_ring(semigroup: NumericalSemigroup) -> PolyRing:
    """
    The ring of the generator variables x_0, ..., x_g (x, y, z, w for up to four generators).
    """
    return poly_ring(generator_names(semigroup))


def binomial_poly(binomial: DeceptiveBinomial, ring: PolyRing) -> Poly:
    one = ring.domain.one
    return ring.from_dict({binomial.lhs.exponents: one}) - ring.from_dict({binomial.rhs.exponents: one})


def _exponent_vectors(weights: Sequence[int], bound: int) -> List[Tuple[int, ...]]:
    vectors: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...], degree: int):
        j = len(prefix)
        if j == len(weights):
            vectors.append(prefix)
            return
        e = 0
        while degree + e * weights[j] < bound:
            extend(prefix + (e,), degree + e * weights[j])
            e += 1

    extend((), 0)
    return vectors


def enumerate_sdec_below_conductor(semigroup: NumericalSemigroup) -> List[DeceptiveBinomial]:
    """
    Every oriented binomial x^lhs - x^rhs of weighted degree d < c, sorted by (d, lhs, rhs).

    @param semigroup: the semigroup
    @type semigroup: NumericalSemigroup
    @return: the binomials
    @rtype: List[DeceptiveBinomial]
    """
    weights = semigroup.generators
    buckets: Dict[int, List[Tuple[int, ...]]] = defaultdict(list)
    for vector in _exponent_vectors(weights, semigroup.conductor):
        buckets[sum(i * v for i, v in zip(vector, weights))].append(vector)

    binomials = []
    for degree in sorted(buckets):
        # lexicographic order on a bucket puts the smaller entry at the first difference on the left
        members = sorted(buckets[degree])
        for lhs, rhs in combinations(members, 2):
            binomials.append(DeceptiveBinomial(GenMonomial(lhs, weights), GenMonomial(rhs, weights)))
    binomials.sort(key=DeceptiveBinomial.sort_key)
    logger.debug("S_dec of %r below %d: %d binomials", semigroup, semigroup.conductor, len(binomials))
    return binomials


def weighted_homogeneous_parts(f: Poly, weights: Sequence[int]) -> Dict[int, Poly]:
    if len(weights) != f.ring.ngens:
        raise ArityMismatchException(f.ring.ngens, len(weights), "weights")
    parts: Dict[int, dict] = defaultdict(dict)
    for monom, coeff in f.terms():
        parts[sum(e * v for e, v in zip(monom, weights))][monom] = coeff
    return {d: f.ring.from_dict(terms) for d, terms in sorted(parts.items())}


def is_deceptive(f: Poly, weights: Sequence[int]) -> bool:
    """
    f is deceptive iff its lowest weighted-homogeneous part vanishes at (1, ..., 1).
    """
    if not f:
        raise ZeroPolynomialException("Deceptiveness")
    parts = weighted_homogeneous_parts(f, weights)
    lowest = parts[min(parts)]
    return sum(coeff for _, coeff in lowest.terms()) == 0


def _smallest_multiple(target_weight: int, others: Tuple[int, int]) -> Tuple[int, Tuple[int, int]]:
    a_weight, b_weight = others
    k = 1
    while True:
        total = k * target_weight
        # smallest last coordinate first
        for b in range(total // b_weight + 1):
            rest = total - b * b_weight
            if rest % a_weight == 0:
                return k, (rest // a_weight, b)
        k += 1


def idec_generators_3gen(semigroup: NumericalSemigroup) -> ThreeGenIdecGenerators:
    if len(semigroup.generators) != 3:
        raise WrongGeneratorCountException(3, len(semigroup.generators))
    v0, v1, v2 = semigroup.generators
    k0, cof0 = _smallest_multiple(v0, (v1, v2))
    k1, cof1 = _smallest_multiple(v1, (v0, v2))
    k2, cof2 = _smallest_multiple(v2, (v0, v1))
    return ThreeGenIdecGenerators(semigroup.generators, (k0, k1, k2), (cof0, cof1, cof2))
