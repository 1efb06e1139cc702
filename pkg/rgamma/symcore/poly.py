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
Exact rational multivariate polynomials.

Polynomials are sympy ``PolyElement`` values over ``QQ``; this module adds the
evaluation, substitution, linear extraction and canonical rendering the moduli
computations need on top of the ring arithmetic sympy already provides.
"""
from fractions import Fraction
from tokenize import TokenError
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple, Union

from sympy.parsing.sympy_parser import parse_expr, standard_transformations, convert_xor
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from rgamma.exceptions.exceptions import InvalidValueException, RingMismatchException, UnboundVariableException, \
    UnknownVariableException
from rgamma.exceptions.malformed_input import MalformedPolynomialException
from rgamma.type import InputKind

Poly = PolyElement
Rat = Fraction
RatLike = Union[int, str, Fraction, Any]

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def poly_ring(names: Sequence[str]) -> PolyRing:
    """
    Builds (or fetches from sympy's cache) the polynomial ring over QQ in the given variables.

    @param names: the variable names, in canonical order
    @type names: Sequence[str]
    @return: the ring
    @rtype: PolyRing
    """
    return PolyRing(tuple(names) if names else "", QQ, grlex)


def variable_names(ring: PolyRing) -> Tuple[str, ...]:
    return tuple(str(s) for s in ring.symbols)


def to_qq(value: RatLike) -> Any:
    """
    Converts an int, a Fraction, a "p/q" string or a QQ element to a QQ element
    """
    if isinstance(value, str):
        try:
            value = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidValueException("rational", value) from e
    if isinstance(value, bool):
        raise InvalidValueException("rational", value)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def from_qq(value: Any) -> Rat:
    return Fraction(int(value.numerator), int(value.denominator))


def to_fraction(value: RatLike) -> Rat:
    if isinstance(value, Fraction):
        return value
    return from_qq(to_qq(value))


def rat_to_str(value: Rat) -> str:
    value = to_fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def constant(ring: PolyRing, value: RatLike) -> Poly:
    return ring.ground_new(to_qq(value))


def as_poly(ring: PolyRing, value: Union[Poly, RatLike]) -> Poly:
    """
    Lifts a rational to a constant of the ring; polynomials must already belong to it.
    """
    if isinstance(value, PolyElement):
        if value.ring != ring:
            raise RingMismatchException(value.ring, ring)
        return value
    return constant(ring, value)


def scalar_mul(p: Poly, r: RatLike) -> Poly:
    return p * to_qq(r)


def ground_value(p: Poly) -> Rat:
    """
    @param p: a constant polynomial
    @type p: Poly
    @return: its value
    @rtype: Rat
    """
    if not p.is_ground:
        raise InvalidValueException("coefficient", render(p), "(expected a rational constant)")
    return from_qq(p.LC) if p else Fraction(0)


def variable_index(ring: PolyRing, v: str) -> int:
    names = variable_names(ring)
    if v not in names:
        raise UnknownVariableException(v, names)
    return names.index(v)


def occurring_variables(p: Poly) -> Tuple[str, ...]:
    names = variable_names(p.ring)
    used = [False] * len(names)
    for monom in p.itermonoms():
        for i, e in enumerate(monom):
            if e:
                used[i] = True
    return tuple(name for name, flag in zip(names, used) if flag)


def poly_eval(p: Poly, point: Mapping[str, RatLike]) -> Rat:
    """
    Evaluates p exactly. Only the variables actually occurring in p need a value.

    @param p: the polynomial
    @type p: Poly
    @param point: values by variable name
    @type point: Mapping[str, RatLike]
    @return: the value of p at the point
    @rtype: Rat
    """
    names = variable_names(p.ring)
    cache: Dict[str, Rat] = {}
    total = Fraction(0)
    for monom, coeff in p.terms():
        value = from_qq(coeff)
        for name, exp in zip(names, monom):
            if not exp:
                continue
            if name not in cache:
                if name not in point:
                    raise UnboundVariableException(name)
                cache[name] = to_fraction(point[name])
            value *= cache[name] ** exp
        total += value
    return total


def poly_substitute(p: Poly, v: str, q: Poly) -> Poly:
    """
    Replaces the variable v of p by the polynomial q (same ring).
    """
    idx = variable_index(p.ring, v)
    q = as_poly(p.ring, q)
    ring = p.ring
    # p = sum_e h_e * v^e, one product per power of v actually present
    by_power: Dict[int, Dict[Tuple[int, ...], Any]] = {}
    for monom, coeff in p.terms():
        by_power.setdefault(monom[idx], {})[monom[:idx] + (0,) + monom[idx + 1:]] = coeff
    result = ring.zero
    power = ring.one
    for e in range(max(by_power, default=-1) + 1):
        if e:
            power = power * q
        if e in by_power:
            result += ring.from_dict(by_power[e]) * power
    return result


def extract_linear(p: Poly, v: str) -> Optional[Tuple[Rat, Poly]]:
    """
    Writes p as alpha*v + h with alpha a nonzero rational and v absent from h.

    @param p: the polynomial
    @type p: Poly
    @param v: the variable to isolate
    @type v: str
    @return: (alpha, h), or None when v occurs anywhere else than in a linear term
    @rtype: Optional[Tuple[Rat, Poly]]
    """
    names = variable_names(p.ring)
    if v not in names:
        return None
    idx = names.index(v)
    alpha = None
    for monom, coeff in p.terms():
        e = monom[idx]
        if e == 0:
            continue
        if e == 1 and sum(monom) == 1:
            alpha = coeff
            continue
        return None
    if alpha is None:
        return None
    h = p - p.ring.gens[idx] * alpha
    return from_qq(alpha), h


def _term_key(monom: Tuple[int, ...]) -> Tuple:
    return (-sum(monom),) + tuple(-e for e in monom)


def sorted_terms(p: Poly):
    """
    Terms by descending total degree, ties broken by exponents in variable order.
    """
    return sorted(p.terms(), key=lambda term: _term_key(term[0]))


def _render_monomial(names: Sequence[str], monom: Tuple[int, ...]) -> str:
    factors = []
    for name, e in zip(names, monom):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def render(p: Poly) -> str:
    """
    Canonical text of a polynomial, e.g. "5*a5^3 - 3*a7 + 2*b9"
    """
    if not p:
        return "0"
    names = variable_names(p.ring)
    out = []
    for i, (monom, coeff) in enumerate(sorted_terms(p)):
        value = from_qq(coeff)
        negative = value < 0
        magnitude = -value if negative else value
        body = _render_monomial(names, monom)
        if not body:
            text = rat_to_str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{rat_to_str(magnitude)}*{body}"
        if i == 0:
            out.append(f"-{text}" if negative else text)
        else:
            out.append(f" - {text}" if negative else f" + {text}")
    return "".join(out)


def parse_poly(ring: PolyRing, text: str) -> Poly:
    """
    Parses a polynomial written with the ring's variable names ("^" and "**" both mean power).
    Inverse of render on its output.
    """
    local_dict = {str(s): s for s in ring.symbols}
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMATIONS)
    except (SyntaxError, TypeError, ValueError, TokenError) as e:
        raise MalformedPolynomialException(InputKind.POLYNOMIAL, text, str(e)) from e
    foreign = sorted(str(s) for s in expr.free_symbols if s not in ring.symbols)
    if foreign:
        raise UnknownVariableException(foreign[0], variable_names(ring))
    try:
        return ring.from_expr(expr)
    except ValueError as e:
        raise MalformedPolynomialException(InputKind.POLYNOMIAL, text, "not a polynomial with rational coefficients") from e
