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
from fractions import Fraction

import pytest

from contextlib import nullcontext as does_not_raise

from rgamma.exceptions.exceptions import InvalidValueException, RingMismatchException, UnboundVariableException, \
    UnknownVariableException
from rgamma.exceptions.malformed_input import MalformedPolynomialException
from rgamma.symcore.poly import as_poly, extract_linear, ground_value, occurring_variables, parse_poly, poly_eval, \
    poly_ring, poly_substitute, rat_to_str, render, scalar_mul, to_fraction, variable_index

RING = poly_ring(("a", "b", "c"))


def _random_poly(rng, ring, terms=4, degree=3):
    result = ring.zero
    for _ in range(terms):
        monom = tuple(rng.randint(0, degree) for _ in range(ring.ngens))
        result += ring.from_dict({monom: ring.domain(rng.randint(-5, 5), rng.randint(1, 4))})
    return result


def test_ring_axioms():
    rng = random.Random(11)
    for _ in range(30):
        p, q, r = (_random_poly(rng, RING) for _ in range(3))
        assert (p + q) * r == p * r + q * r
        assert (p * q) * r == p * (q * r)
        assert p - p == RING.zero
        point = {"a": Fraction(rng.randint(-3, 3), 2), "b": Fraction(rng.randint(-3, 3)), "c": Fraction(1, 3)}
        assert poly_eval(p * q, point) == poly_eval(p, point) * poly_eval(q, point)
        assert poly_eval(p + q, point) == poly_eval(p, point) + poly_eval(q, point)


@pytest.mark.parametrize("text, expected", [
    pytest.param("0", "0", id="zero"),
    pytest.param("3*c - 2*a*b + 1", "-2*a*b + 3*c + 1", id="degree_first"),
    pytest.param("b^2 + a^2", "a^2 + b^2", id="variable_order"),
    pytest.param("-a", "-a", id="leading_minus"),
    pytest.param("1/2*a - 3/4", "1/2*a - 3/4", id="fractions"),
    pytest.param("a**3*b - c", "a^3*b - c", id="double_star"),
])
def test_render(text, expected):
    assert render(parse_poly(RING, text)) == expected


def test_render_parse_inverse():
    rng = random.Random(5)
    for _ in range(20):
        p = _random_poly(rng, RING)
        assert parse_poly(RING, render(p)) == p


@pytest.mark.parametrize("text, expectation", [
    pytest.param("a + 2*b", does_not_raise(), id="valid"),
    pytest.param("a +", pytest.raises(MalformedPolynomialException), id="dangling"),
    pytest.param("a + (b", pytest.raises(MalformedPolynomialException), id="unbalanced"),
    pytest.param("a + q", pytest.raises(UnknownVariableException), id="foreign_symbol"),
])
def test_parse_poly_errors(text, expectation):
    with expectation:
        parse_poly(RING, text)


def test_poly_eval_only_needs_occurring_variables():
    p = parse_poly(RING, "2*a^2 - b")

    assert poly_eval(p, {"a": 3, "b": "1/2"}) == Fraction(35, 2)
    with pytest.raises(UnboundVariableException):
        poly_eval(p, {"a": 3})
    assert occurring_variables(p) == ("a", "b")


def test_poly_substitute():
    p = parse_poly(RING, "a^2*c + b")
    q = parse_poly(RING, "b - 1")

    assert poly_substitute(p, "a", q) == parse_poly(RING, "b^2*c - 2*b*c + c + b")
    assert poly_substitute(p, "a", RING.zero) == parse_poly(RING, "b")
    with pytest.raises(UnknownVariableException):
        poly_substitute(p, "z", q)


@pytest.mark.parametrize("text, variable, expected", [
    pytest.param("2*a*b + 3*c", "c", (Fraction(3), "2*a*b"), id="linear"),
    pytest.param("-1/2*c + a^2", "c", (Fraction(-1, 2), "a^2"), id="fraction"),
    pytest.param("2*a*b + 3*c", "a", None, id="nonconstant_coefficient"),
    pytest.param("c^2 + c + a", "c", None, id="also_quadratic"),
    pytest.param("a + b", "c", None, id="absent"),
    pytest.param("a + b", "z", None, id="unknown"),
])
def test_extract_linear(text, variable, expected):
    found = extract_linear(parse_poly(RING, text), variable)

    if expected is None:
        assert found is None
    else:
        alpha, rest = found
        assert alpha == expected[0]
        assert render(rest) == expected[1]


def test_rationals():
    assert rat_to_str(Fraction(-1, 2)) == "-1/2"
    assert rat_to_str(Fraction(4, 2)) == "2"
    assert to_fraction("3/6") == Fraction(1, 2)
    assert ground_value(as_poly(RING, Fraction(2, 3))) == Fraction(2, 3)
    assert ground_value(RING.zero) == 0
    assert scalar_mul(parse_poly(RING, "a"), "1/3") == parse_poly(RING, "1/3*a")
    assert variable_index(RING, "c") == 2
    with pytest.raises(InvalidValueException):
        to_fraction("1/0")
    with pytest.raises(InvalidValueException):
        ground_value(parse_poly(RING, "a"))
    with pytest.raises(RingMismatchException):
        as_poly(RING, poly_ring(("x",)).gens[0])
