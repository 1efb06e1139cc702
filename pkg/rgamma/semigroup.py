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
Combinatorics of numerical semigroups: minimal generators, conductor, gaps,
membership, factorizations and the plane branch criterion.
"""
import logging
from functools import lru_cache, reduce
from math import gcd
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from rgamma.datatypes.numerical_semigroup import NumericalSemigroup
from rgamma.datatypes.plane_criterion_report import PlaneCriterionReport
from rgamma.exceptions.exceptions import ArityMismatchException, EmptyInputException, InvalidValueException, \
    NonCoprimeGeneratorsException, NotRepresentableException

logger = logging.getLogger(__name__)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def from_generators(raw: Iterable[int]) -> NumericalSemigroup:
    """
    Builds the numerical semigroup generated by raw, dropping redundant generators.

    @param raw: positive integers with gcd 1
    @type raw: Iterable[int]
    @return: the semigroup
    @rtype: NumericalSemigroup
    """
    values = list(raw)
    if not values:
        raise EmptyInputException()
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
            raise InvalidValueException("generator", v, "(generators are positive integers)")
    divisor = reduce(gcd, values)
    if divisor != 1:
        raise NonCoprimeGeneratorsException(sorted(values), divisor)

    candidates = sorted(set(values))
    top = candidates[-1]
    reach = [False] * (top + 1)
    reach[0] = True
    minimal: List[int] = []
    for v in candidates:
        if reach[v]:
            continue
        minimal.append(v)
        for m in range(v, top + 1):
            if reach[m - v]:
                reach[m] = True

    conductor, members = _sieve(minimal)
    gaps = [n for n in range(1, conductor) if n not in members]
    elements = [n for n in range(1, conductor) if n in members]
    logger.debug("semigroup <%s>: conductor %d, %d gaps", ",".join(map(str, minimal)), conductor, len(gaps))
    return NumericalSemigroup(minimal, conductor, gaps, elements)


def _sieve(generators: Sequence[int]) -> Tuple[int, FrozenSet[int]]:
    # Once v_0 consecutive integers are members, every larger integer is one too.
    v0 = generators[0]
    member = [True]
    run_start, run = 0, 1
    n = 0
    while run < v0:
        n += 1
        is_member = any(n >= v and member[n - v] for v in generators)
        member.append(is_member)
        if is_member:
            if run == 0:
                run_start = n
            run += 1
        else:
            run = 0
    return run_start, frozenset(i for i in range(run_start) if member[i])


def contains(semigroup: NumericalSemigroup, n: int) -> bool:
    return n >= 0 and n in semigroup


def ambient_dimension(semigroup: NumericalSemigroup) -> int:
    """
    M(Gamma): the number of gaps above v_i, summed over every minimal generator v_i.
    """
    return sum(sum(1 for delta in semigroup.gaps if delta > v) for v in semigroup.generators)


def frobenius_number(semigroup: NumericalSemigroup) -> int:
    return semigroup.conductor - 1


def genus(semigroup: NumericalSemigroup) -> int:
    return len(semigroup.gaps)


def multiplicity(semigroup: NumericalSemigroup) -> int:
    return semigroup.generators[0]


def weighted_degree(semigroup: NumericalSemigroup, exponents: Sequence[int]) -> int:
    if len(exponents) != len(semigroup.generators):
        raise ArityMismatchException(len(semigroup.generators), len(exponents), "exponents")
    return sum(i * v for i, v in zip(exponents, semigroup.generators))


def _normalize_subset(semigroup: NumericalSemigroup, subset: Optional[Iterable[int]]) -> Tuple[int, ...]:
    if subset is None:
        return tuple(range(len(semigroup.generators)))
    indices = tuple(sorted(set(subset)))
    if not indices:
        raise EmptyInputException("generator subset")
    for i in indices:
        if not 0 <= i < len(semigroup.generators):
            raise InvalidValueException("generator index", i, f"(the semigroup has {len(semigroup.generators)} generators)")
    return indices


@lru_cache(maxsize=256)
def _prefix_reach(chosen: Tuple[int, ...], bound: int) -> Tuple[FrozenSet[int], ...]:
    """
    For each k, the integers in [0, bound] that are sums of chosen[0..k].
    """
    layers = []
    reach = [m % chosen[0] == 0 for m in range(bound + 1)]
    layers.append(frozenset(m for m, ok in enumerate(reach) if ok))
    for v in chosen[1:]:
        for m in range(v, bound + 1):
            if not reach[m] and reach[m - v]:
                reach[m] = True
        layers.append(frozenset(m for m, ok in enumerate(reach) if ok))
    return tuple(layers)


def subsemigroup_contains(semigroup: NumericalSemigroup, subset: Iterable[int], n: int) -> bool:
    """
    Whether n is a sum of the generators v_j, j in subset.
    """
    if n < 0:
        return False
    indices = _normalize_subset(semigroup, subset)
    chosen = tuple(semigroup.generators[i] for i in indices)
    return n in _prefix_reach(chosen, max(n, semigroup.conductor))[-1]


def revlex_min_factorization(semigroup: NumericalSemigroup, n: int, subset: Optional[Iterable[int]] = None) -> Tuple[int, ...]:
    """
    The factorization n = sum i_j v_j that is smallest in reverse lexicographic order: at the
    largest index where two factorizations differ, the smaller entry wins.

    @param semigroup: the semigroup
    @type semigroup: NumericalSemigroup
    @param n: an element of the semigroup with 0 < n < c
    @type n: int
    @param subset: when provided, only the generators with these indices may be used
    @type subset: Optional[Iterable[int]]
    @return: the exponent vector (i_0, ..., i_g)
    @rtype: Tuple[int, ...]
    """
    if n <= 0 or n >= semigroup.conductor:
        raise NotRepresentableException(n, f"only 0 < n < {semigroup.conductor} is factored")
    indices = _normalize_subset(semigroup, subset)
    chosen = tuple(semigroup.generators[i] for i in indices)
    layers = _prefix_reach(chosen, semigroup.conductor)
    if n not in layers[-1]:
        raise NotRepresentableException(n, f"not a sum of {', '.join(map(str, chosen))}")

    exponents = [0] * len(semigroup.generators)
    remaining = n
    for k in range(len(chosen) - 1, 0, -1):
        i = 0
        while remaining - i * chosen[k] not in layers[k - 1]:
            i += 1
        exponents[indices[k]] = i
        remaining -= i * chosen[k]
    exponents[indices[0]] = remaining // chosen[0]
    return tuple(exponents)


def is_plane_semigroup(semigroup: NumericalSemigroup) -> PlaneCriterionReport:
    v = semigroup.generators
    e_sequence = [v[0]]
    for value in v[1:]:
        e_sequence.append(gcd(e_sequence[-1], value))

    condition_i = e_sequence[-1] == 1 and all(a > b for a, b in zip(e_sequence, e_sequence[1:]))
    failures = [i for i in range(2, len(v)) if v[i] <= _lcm(e_sequence[i - 2], v[i - 1])]
    return PlaneCriterionReport(e_sequence, condition_i, failures)
