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

import pytest

from rgamma.exceptions.exceptions import InvalidValueException, ModulusMismatchException
from rgamma.exceptions.malformed_input import MalformedSeriesException
from rgamma.symcore.poly import parse_poly, poly_ring
from rgamma.symcore.series import Series, parse_series, parse_series_list, render_series

NUMERIC = poly_ring(())
SYMBOLIC = poly_ring(("a5", "b7"))


def _series(text, modulus, ring=NUMERIC):
    return parse_series(text, modulus, ring)


def test_truncating_product():
    s = _series("t + t^2", 4)

    assert s * s == _series("t^2 + 2*t^3", 4)
    assert s ** 3 == _series("t^3", 4)
    assert s ** 0 == Series.one(NUMERIC, 4)
    assert (s ** 4).is_zero()


def test_constructor_normalizes():
    s = Series(NUMERIC, 5, {0: 0, 2: Fraction(1, 2), 7: 3})

    assert s.support() == [2]
    assert s.order() == 2
    assert Series.zero(NUMERIC, 5).order() is None
    with pytest.raises(InvalidValueException):
        Series(NUMERIC, 0)
    with pytest.raises(InvalidValueException):
        Series(NUMERIC, 5, {-1: 1})


def test_arithmetic_with_scalars():
    s = _series("t^2 - t^3", 6)

    assert s + 1 == _series("1 + t^2 - t^3", 6)
    assert 1 - s == _series("1 - t^2 + t^3", 6)
    assert 2 * s == s.scale(2)
    assert s.scale("1/2") == _series("1/2*t^2 - 1/2*t^3", 6)
    assert s - s == Series.zero(NUMERIC, 6)
    assert s + s - s == s


def test_symbolic_coefficients():
    a5, b7 = SYMBOLIC.gens
    x = Series(SYMBOLIC, 16, {4: 1, 5: a5})
    y = Series(SYMBOLIC, 16, {6: 1, 7: b7})

    difference = y * y - x * x * x

    assert difference.order() == 13
    assert difference.coefficient(13) == parse_poly(SYMBOLIC, "2*b7 - 3*a5")
    assert not difference.is_numeric()
    assert render_series(difference.truncate(14)) == "(-3*a5 + 2*b7)*t^13"


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatchException):
        _series("t", 4) + _series("t", 5)
    with pytest.raises(ModulusMismatchException):
        _series("t", 4).truncate(8)
    assert _series("t + t^5", 8).truncate(4) == _series("t", 4)


@pytest.mark.parametrize("text, expected", [
    pytest.param("t^4 + t^6 - 1/2*t^15", "t^4 + t^6 - 1/2*t^15", id="plain"),
    pytest.param("-t^3 + 2", "2 - t^3", id="ascending"),
    pytest.param("0", "0", id="zero"),
    pytest.param("t^20", "0", id="truncated_away"),
])
def test_render_series(text, expected):
    assert render_series(_series(text, 16)) == expected


@pytest.mark.parametrize("text", [
    pytest.param("", id="empty"),
    pytest.param("t^3 +", id="dangling"),
    pytest.param("t^3 + x", id="foreign_symbol"),
])
def test_parse_series_errors(text):
    with pytest.raises(MalformedSeriesException):
        parse_series(text, 8)


def test_parse_series_list():
    generators = parse_series_list("t^3+t^4+t^5;t^5", 8)

    assert [s.numeric_coefficients() for s in generators] == [{3: 1, 4: 1, 5: 1}, {5: 1}]
    assert generators[0].to_dict() == {"modulus": 8, "terms": [{"exp": 3, "coeff": "1"}, {"exp": 4, "coeff": "1"},
                                                               {"exp": 5, "coeff": "1"}]}
