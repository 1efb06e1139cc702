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

import random

import pytest

from rgamma.deceptive import binomial_poly, enumerate_sdec_below_conductor, generator_ring
from rgamma.exceptions.exceptions import ArityMismatchException, EmptyInputException, NotNormalFormException
from rgamma.helper_functions import random_rational
from rgamma.normalform import build_template, instantiate, make_point
from rgamma.reduction import MonomialSeriesCache, phi_eval, reduce, reduce_subset, witness_series, \
    witness_weighted_order
from rgamma.semigroup import from_generators
from rgamma.symcore.poly import parse_poly
from rgamma.symcore.series import Series, parse_series_list, render_series
from rgamma.type import ReductionMode

from tests.data.worked_examples import EQUATION_4_6_13

RANDOM_SEMIGROUPS = [[4, 6, 13], [3, 5, 7], [5, 7, 9], [8, 9, 10, 11], [4, 5, 11], [6, 7, 8], [3, 7], [5, 8, 12, 14]]


def _random_series(rng, ring, modulus):
    support = rng.sample(range(1, modulus), rng.randint(1, min(6, modulus - 1)))
    return Series(ring, modulus, {e: random_rational(rng, bound=4, denominator=2) for e in support})


def test_phi_eval_numeric(gamma_4_6_13, numeric_generators_4_6_13):
    f = binomial_poly(enumerate_sdec_below_conductor(gamma_4_6_13)[0], generator_ring(gamma_4_6_13))

    image = phi_eval(numeric_generators_4_6_13, f)

    assert image.numeric_coefficients() == {13: 2, 14: 1}


def test_reduce_numeric(gamma_4_6_13, numeric_generators_4_6_13):
    f = binomial_poly(enumerate_sdec_below_conductor(gamma_4_6_13)[0], generator_ring(gamma_4_6_13))
    image = phi_eval(numeric_generators_4_6_13, f)

    trace = reduce(gamma_4_6_13, numeric_generators_4_6_13, image)

    assert render_series(trace.reduced) == "-t^15"
    assert [(step.power, step.factorization) for step in trace.steps] == [(13, (0, 0, 1)), (14, (2, 1, 0))]
    assert trace.mode == ReductionMode.FULL
    assert trace.witness == {(0, 0, 1): trace.steps[0].multiplier, (2, 1, 0): trace.steps[1].multiplier}


def test_reduce_subset(gamma_4_6_13, numeric_generators_4_6_13):
    image = parse_series_list("2*t^13 + t^14", 16, numeric_generators_4_6_13[0].ring)[0]

    trace = reduce_subset(gamma_4_6_13, (1, 0), numeric_generators_4_6_13, image)

    assert render_series(trace.reduced) == "2*t^13 - t^15"
    assert trace.subset == (0, 1)
    assert trace.to_dict()["subset"] == [0, 1]
    with pytest.raises(EmptyInputException):
        reduce_subset(gamma_4_6_13, (), numeric_generators_4_6_13, image)


def test_reduce_symbolic(gamma_4_6_13, template_4_6_13):
    f = binomial_poly(enumerate_sdec_below_conductor(gamma_4_6_13)[0], generator_ring(gamma_4_6_13))

    trace = reduce(gamma_4_6_13, template_4_6_13.generators, phi_eval(template_4_6_13.generators, f))

    assert trace.reduced.support() == [15]
    assert trace.reduced.coefficient(15) == parse_poly(template_4_6_13.ring, EQUATION_4_6_13)
    assert witness_weighted_order(trace, gamma_4_6_13) > 12


def test_reduce_rejects_non_normal_form(gamma_4_6_13):
    generators = parse_series_list("t^4+t^8;t^6;t^13", 16)

    with pytest.raises(NotNormalFormException):
        reduce(gamma_4_6_13, generators, generators[0])


def test_phi_eval_arity(gamma_4_6_13, numeric_generators_4_6_13):
    f = generator_ring(gamma_4_6_13).gens[0]

    with pytest.raises(ArityMismatchException):
        phi_eval(numeric_generators_4_6_13[:2], f)
    with pytest.raises(EmptyInputException):
        MonomialSeriesCache([])


def test_monomial_cache(numeric_generators_4_6_13):
    cache = MonomialSeriesCache(numeric_generators_4_6_13)
    x, y, _ = numeric_generators_4_6_13

    assert cache.monomial((2, 1, 0)) == x * x * y
    assert cache.monomial((2, 1, 0)) is cache.monomial((2, 1, 0))
    assert cache.power(1, 0) == Series.one(cache.ring, 16)


def test_reduction_invariants():
    rng = random.Random(1729)
    semigroups = [from_generators(raw) for raw in RANDOM_SEMIGROUPS]
    templates = [build_template(semigroup) for semigroup in semigroups]

    for _ in range(500):
        k = rng.randrange(len(semigroups))
        semigroup, template = semigroups[k], templates[k]
        point = make_point(template, {name: random_rational(rng) for name in template.variables})
        generators = instantiate(template, point)
        cache = MonomialSeriesCache(generators)
        r1 = _random_series(rng, template.ring, template.modulus)
        r2 = _random_series(rng, template.ring, template.modulus)
        a, b = random_rational(rng), random_rational(rng)

        trace = reduce(semigroup, generators, r1, cache)

        # support on gaps
        assert all(e in semigroup.gaps for e in trace.reduced.support())
        # reconstruction
        assert trace.reduced + witness_series(trace, generators, cache) == r1
        # idempotence
        again = reduce(semigroup, generators, trace.reduced, cache)
        assert again.reduced == trace.reduced and not again.steps
        # linearity
        combined = reduce(semigroup, generators, r1.scale(a) + r2.scale(b), cache).reduced
        assert combined == trace.reduced.scale(a) + reduce(semigroup, generators, r2, cache).reduced.scale(b)
        # weighted order growth
        if trace.steps:
            assert witness_weighted_order(trace, semigroup) >= r1.order()
