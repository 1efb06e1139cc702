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

from collections import deque
from itertools import combinations, product

import pytest

from rgamma.datatypes.deceptive_binomial import DeceptiveBinomial, GenMonomial
from rgamma.deceptive import binomial_poly, enumerate_sdec_below_conductor, generator_names, generator_ring, \
    idec_generators_3gen, is_deceptive, weighted_homogeneous_parts
from rgamma.exceptions.exceptions import ArityMismatchException, InvalidValueException, WrongGeneratorCountException, \
    ZeroPolynomialException
from rgamma.semigroup import from_generators
from rgamma.symcore.poly import parse_poly


def _fiber(weights, degree):
    bounds = [range(degree // v + 1) for v in weights]
    return [e for e in product(*bounds) if sum(i * v for i, v in zip(e, weights)) == degree]


def _moves_connect(fiber, binomials):
    """Whether every monomial of the fiber is reached from the first one by applying the binomials."""
    moves = []
    for b in binomials:
        moves.append((b.lhs.exponents, b.rhs.exponents))
        moves.append((b.rhs.exponents, b.lhs.exponents))
    seen = {fiber[0]}
    queue = deque([fiber[0]])
    while queue:
        u = queue.popleft()
        for src, dst in moves:
            if all(a >= b for a, b in zip(u, src)):
                w = tuple(a - b + c for a, b, c in zip(u, src, dst))
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return seen == set(fiber)


@pytest.mark.parametrize("raw, expected", [
    pytest.param([4, 6, 13], ["y^2 - x^3"], id="4_6_13"),
    pytest.param([9, 16, 19], ["y*z^2 - x^6", "z^3 - x*y^3"], id="9_16_19"),
    pytest.param([8, 9, 10, 11], ["y^2 - x*z", "y*z - x*w", "z^2 - y*w"], id="8_9_10_11"),
    pytest.param([3, 5], [], id="two_generators"),
    pytest.param([3, 4, 5], [], id="tiny_conductor"),
])
def test_enumerate_sdec_below_conductor(raw, expected):
    semigroup = from_generators(raw)
    names = generator_names(semigroup)

    binomials = enumerate_sdec_below_conductor(semigroup)

    assert [b.render(names) for b in binomials] == expected
    assert all(b.is_oriented and b.degree < semigroup.conductor for b in binomials)


@pytest.mark.parametrize("raw", [
    pytest.param([5, 7, 9], id="5_7_9"),
    pytest.param([6, 7, 8, 9], id="6_7_8_9"),
    pytest.param([5, 6, 13], id="5_6_13"),
    pytest.param([7, 9, 10, 12, 13], id="five_generators"),
])
def test_enumeration_matches_brute_force(raw):
    semigroup = from_generators(raw)
    weights = semigroup.generators
    c = semigroup.conductor
    vectors = [e for e in product(*[range(c // v + 1) for v in weights]) if sum(i * v for i, v in zip(e, weights)) < c]
    expected = set()
    for u, w in combinations(vectors, 2):
        if u != w and sum(i * v for i, v in zip(u, weights)) == sum(i * v for i, v in zip(w, weights)):
            expected.add((min(u, w), max(u, w)))

    binomials = enumerate_sdec_below_conductor(semigroup)

    assert {(b.lhs.exponents, b.rhs.exponents) for b in binomials} == expected
    assert len(binomials) == len(expected)
    assert [b.sort_key() for b in binomials] == sorted(b.sort_key() for b in binomials)


def test_generator_names():
    assert generator_names(from_generators([3, 5])) == ("x", "y")
    assert generator_names(from_generators([5, 6, 7, 8, 9])) == ("x0", "x1", "x2", "x3", "x4")


def test_deceptive_binomial_validation():
    weights = (4, 6, 13)
    y2 = GenMonomial((0, 2, 0), weights)
    x3 = GenMonomial((3, 0, 0), weights)

    binomial = DeceptiveBinomial(x3, y2)

    assert not binomial.is_oriented
    assert binomial.oriented().render(("x", "y", "z")) == "y^2 - x^3"
    assert binomial.oriented().to_dict() == {"lhs": [0, 2, 0], "rhs": [3, 0, 0], "degree": 12}
    ring = generator_ring(from_generators([4, 6, 13]))
    assert binomial_poly(binomial.oriented(), ring) == parse_poly(ring, "y^2 - x^3")
    with pytest.raises(InvalidValueException):
        DeceptiveBinomial(x3, GenMonomial((1, 1, 0), weights))
    with pytest.raises(InvalidValueException):
        DeceptiveBinomial(x3, x3)


@pytest.mark.parametrize("text, expected", [
    pytest.param("y^2 - x^3", True, id="binomial"),
    pytest.param("y^2 - x^3 + x^4", True, id="higher_terms"),
    pytest.param("x - y", False, id="different_degrees"),
    pytest.param("2*y^2 - x^3", False, id="unbalanced"),
    pytest.param("y^2 - x^3 + x*y", False, id="lower_term"),
])
def test_is_deceptive(gamma_4_6_13, text, expected):
    ring = generator_ring(gamma_4_6_13)

    assert is_deceptive(parse_poly(ring, text), gamma_4_6_13.generators) == expected


def test_is_deceptive_errors(gamma_4_6_13):
    ring = generator_ring(gamma_4_6_13)

    with pytest.raises(ZeroPolynomialException):
        is_deceptive(ring.zero, gamma_4_6_13.generators)
    with pytest.raises(ArityMismatchException):
        weighted_homogeneous_parts(ring.gens[0], (4, 6))


def test_weighted_homogeneous_parts(gamma_4_6_13):
    ring = generator_ring(gamma_4_6_13)

    parts = weighted_homogeneous_parts(parse_poly(ring, "y^2 - x^3 + x*y + z"), gamma_4_6_13.generators)

    assert sorted(parts) == [10, 12, 13]
    assert parts[12] == parse_poly(ring, "y^2 - x^3")


@pytest.mark.parametrize("raw, ks, cofactors, rendered", [
    pytest.param([9, 16, 19], (6, 4, 3), ((1, 2), (5, 1), (1, 3)), ["x^6 - y*z^2", "y^4 - x^5*z", "z^3 - x*y^3"],
                 id="9_16_19"),
    pytest.param([4, 6, 13], (3, 2, 2), ((2, 0), (3, 0), (5, 1)), ["x^3 - y^2", "y^2 - x^3", "z^2 - x^5*y"],
                 id="4_6_13"),
    pytest.param([3, 5, 7], (4, 2, 2), ((1, 1), (1, 1), (3, 1)), ["x^4 - y*z", "y^2 - x*z", "z^2 - x^3*y"],
                 id="3_5_7"),
])
def test_idec_generators_3gen(raw, ks, cofactors, rendered):
    idec = idec_generators_3gen(from_generators(raw))

    assert (idec.k0, idec.k1, idec.k2) == ks
    assert ((idec.m0, idec.m1), (idec.n0, idec.n1), (idec.p0, idec.p1)) == cofactors
    assert [f.render(("x", "y", "z")) for f in idec.binomials] == rendered


@pytest.mark.parametrize("raw", [
    pytest.param([9, 16, 19], id="9_16_19"),
    pytest.param([4, 6, 13], id="4_6_13"),
    pytest.param([3, 5, 7], id="3_5_7"),
    pytest.param([5, 7, 11], id="5_7_11"),
])
def test_idec_generators_span_every_fiber(raw):
    semigroup = from_generators(raw)
    idec = idec_generators_3gen(semigroup)

    for degree in range(1, semigroup.conductor + 30):
        fiber = _fiber(semigroup.generators, degree)
        if len(fiber) > 1:
            assert _moves_connect(fiber, idec.binomials), degree


def test_idec_generators_need_three_generators(gamma_8_9_10_11):
    with pytest.raises(WrongGeneratorCountException):
        idec_generators_3gen(gamma_8_9_10_11)


def test_idec_to_dict(gamma_9_16_19):
    data = idec_generators_3gen(gamma_9_16_19).to_dict(gamma_9_16_19.conductor)

    assert data["k"] == [6, 4, 3]
    assert data["below_conductor"] == [True, False, True]
