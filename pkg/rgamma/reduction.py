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
The substitution homomorphism x_i -> x_i(t) and the reduction of a series against the
normal-form generators: semigroup powers below the conductor are stripped, in increasing
order, with monomials in the generators given by revlex-minimal factorizations.
"""
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from rgamma.datatypes.numerical_semigroup import NumericalSemigroup
from rgamma.datatypes.reduction_trace import ReductionStep, ReductionTrace
from rgamma.exceptions.exceptions import ArityMismatchException, EmptyInputException, NotNormalFormException
from rgamma.normalform import is_normal_form
from rgamma.semigroup import revlex_min_factorization, subsemigroup_contains
from rgamma.symcore.poly import Poly
from rgamma.symcore.series import Series, render_series
from rgamma.type import ReductionMode

logger = logging.getLogger(__name__)


class MonomialSeriesCache:
    """
    Products of the generator series, built on demand. One cache serves one generator list;
    it is not shared between threads.
    """
    generators: List[Series]
    _powers: Dict[Tuple[int, int], Series]
    _monomials: Dict[Tuple[int, ...], Series]

    def __init__(self, generators: Sequence[Series]):
        if not generators:
            raise EmptyInputException("generator list")
        self.generators = list(generators)
        self._powers = {}
        self._monomials = {}

    @property
    def ring(self):
        return self.generators[0].ring

    @property
    def modulus(self) -> int:
        return self.generators[0].modulus

    def power(self, j: int, k: int) -> Series:
        if k == 0:
            return Series.one(self.ring, self.modulus)
        key = (j, k)
        if key not in self._powers:
            self._powers[key] = self.generators[j] if k == 1 else self.power(j, k - 1) * self.generators[j]
        return self._powers[key]

    def monomial(self, exponents: Sequence[int]) -> Series:
        key = tuple(exponents)
        if key not in self._monomials:
            result = Series.one(self.ring, self.modulus)
            for j, k in enumerate(key):
                if k:
                    result = result * self.power(j, k)
            self._monomials[key] = result
        return self._monomials[key]


def phi_eval(generators: Sequence[Series], f: Poly, cache: Optional[MonomialSeriesCache] = None) -> Series:
    """
    Substitutes x_i -> generators[i] in f and expands mod t^c.

    @param generators: one series per variable of f's ring
    @type generators: Sequence[Series]
    @param f: a polynomial in the generator variables
    @type f: Poly
    @param cache: monomial cache for these generators, created when absent
    @type cache: Optional[MonomialSeriesCache]
    @return: the image of f
    @rtype: Series
    """
    if len(generators) != f.ring.ngens:
        raise ArityMismatchException(f.ring.ngens, len(generators))
    cache = cache or MonomialSeriesCache(generators)
    total = Series.zero(cache.ring, cache.modulus)
    for monom, coeff in f.terms():
        total = total + cache.monomial(monom).scale(coeff)
    return total


def _reduce(semigroup: NumericalSemigroup, generators: Sequence[Series], r: Series, subset: Optional[Tuple[int, ...]],
            cache: Optional[MonomialSeriesCache]) -> ReductionTrace:
    if not is_normal_form(generators, semigroup):
        raise NotNormalFormException("; ".join(render_series(s) for s in generators))
    cache = cache or MonomialSeriesCache(generators)
    if subset is None:
        powers: Iterable[int] = semigroup.elements_below_c
    else:
        powers = [n for n in range(1, semigroup.conductor) if subsemigroup_contains(semigroup, subset, n)]

    current = r
    steps = []
    for n in powers:
        q = current.coefficient(n)
        if not q:
            continue
        factorization = revlex_min_factorization(semigroup, n, subset)
        current = current - cache.monomial(factorization).scale(q)
        steps.append(ReductionStep(n, q, factorization))
    logger.debug("reduction of a series of order %s: %d removals", r.order(), len(steps))
    mode = ReductionMode.FULL if subset is None else ReductionMode.SUBSET
    return ReductionTrace(current, steps, mode, subset)


def reduce(semigroup: NumericalSemigroup, generators: Sequence[Series], r: Series,
           cache: Optional[MonomialSeriesCache] = None) -> ReductionTrace:
    """
    Strips every power of Gamma below the conductor from r; the result is supported on gaps.
    """
    return _reduce(semigroup, generators, r, None, cache)


def reduce_subset(semigroup: NumericalSemigroup, subset: Iterable[int], generators: Sequence[Series], r: Series,
                  cache: Optional[MonomialSeriesCache] = None) -> ReductionTrace:
    """
    As reduce, but only the powers generated by {v_j : j in subset} are stripped, using those
    generators alone.
    """
    indices = tuple(sorted(set(subset)))
    if not indices:
        raise EmptyInputException("generator subset")
    return _reduce(semigroup, generators, r, indices, cache)


def witness_series(trace: ReductionTrace, generators: Sequence[Series], cache: Optional[MonomialSeriesCache] = None) -> Series:
    """
    phi(F) for the witness F of a trace; input = reduced + phi(F).
    """
    cache = cache or MonomialSeriesCache(generators)
    total = Series.zero(cache.ring, cache.modulus)
    for step in trace.steps:
        total = total + cache.monomial(step.factorization).scale(step.multiplier)
    return total


def witness_weighted_order(trace: ReductionTrace, semigroup: NumericalSemigroup) -> Optional[int]:
    if not trace.steps:
        return None
    return min(sum(i * v for i, v in zip(step.factorization, semigroup.generators)) for step in trace.steps)
