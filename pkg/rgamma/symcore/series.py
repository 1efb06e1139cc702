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
Truncated power series in t modulo t^c whose coefficients are polynomials.

Numeric series are series whose coefficients happen to be constants, so the
symbolic and the numeric computations share every code path.
"""
from typing import Dict, List, Mapping, Optional, Union

from sympy.polys.rings import PolyElement, PolyRing

from rgamma.exceptions.exceptions import InvalidValueException, ModulusMismatchException, UnknownVariableException, \
    RingMismatchException
from rgamma.exceptions.malformed_input import MalformedPolynomialException, MalformedSeriesException
from rgamma.symcore.poly import Poly, Rat, RatLike, as_poly, constant, ground_value, parse_poly, \
    poly_ring, rat_to_str, render, to_qq

Scalar = Union[Poly, RatLike]


class Series:
    """
    An element of R[t]/(t^modulus), R being a polynomial ring over QQ.
    No zero coefficient and no exponent >= modulus is ever stored.
    """
    modulus: int
    ring: PolyRing
    coeffs: Dict[int, Poly]

    def __init__(self, ring: PolyRing, modulus: int, coeffs: Optional[Mapping[int, Scalar]] = None):
        if not isinstance(modulus, int) or modulus < 1:
            raise InvalidValueException("modulus", modulus, "(must be a positive integer)")
        self.ring = ring
        self.modulus = modulus
        self.coeffs = {}
        for e, c in (coeffs or {}).items():
            if e < 0:
                raise InvalidValueException("exponent", e, "(must be non-negative)")
            if e >= modulus:
                continue
            c = as_poly(ring, c)
            if c:
                self.coeffs[e] = c

    @staticmethod
    def zero(ring: PolyRing, modulus: int) -> 'Series':
        return Series(ring, modulus)

    @staticmethod
    def one(ring: PolyRing, modulus: int) -> 'Series':
        return Series(ring, modulus, {0: 1})

    @staticmethod
    def monomial(ring: PolyRing, modulus: int, exponent: int, coefficient: Scalar = 1) -> 'Series':
        return Series(ring, modulus, {exponent: coefficient})

    def _check_compatible(self, other: 'Series'):
        if self.modulus != other.modulus:
            raise ModulusMismatchException(self.modulus, other.modulus)
        if self.ring != other.ring:
            raise RingMismatchException(other.ring, self.ring)

    def _coerce(self, other) -> 'Series':
        if isinstance(other, Series):
            self._check_compatible(other)
            return other
        return Series(self.ring, self.modulus, {0: other})

    def is_zero(self) -> bool:
        return not self.coeffs

    def order(self) -> Optional[int]:
        return min(self.coeffs) if self.coeffs else None

    def coefficient(self, exponent: int) -> Poly:
        return self.coeffs.get(exponent, self.ring.zero)

    def support(self) -> List[int]:
        return sorted(self.coeffs)

    def is_numeric(self) -> bool:
        return all(c.is_ground for c in self.coeffs.values())

    def numeric_coefficients(self) -> Dict[int, Rat]:
        return {e: ground_value(c) for e, c in self.coeffs.items()}

    def truncate(self, modulus: int) -> 'Series':
        if modulus > self.modulus:
            raise ModulusMismatchException(self.modulus, modulus)
        return Series(self.ring, modulus, self.coeffs)

    def __add__(self, other) -> 'Series':
        other = self._coerce(other)
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = coeffs.get(e, self.ring.zero) + c
        return Series(self.ring, self.modulus, coeffs)

    __radd__ = __add__

    def __neg__(self) -> 'Series':
        return Series(self.ring, self.modulus, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> 'Series':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'Series':
        return self._coerce(other) - self

    def scale(self, scalar: Scalar) -> 'Series':
        """
        Multiplies every coefficient by a polynomial of the coefficient ring or a rational.
        """
        if isinstance(scalar, PolyElement):
            factor = as_poly(self.ring, scalar)
        else:
            factor = to_qq(scalar)
        return Series(self.ring, self.modulus, {e: c * factor for e, c in self.coeffs.items()})

    def __mul__(self, other) -> 'Series':
        if not isinstance(other, Series):
            return self.scale(other)
        self._check_compatible(other)
        coeffs: Dict[int, Poly] = {}
        c = self.modulus
        right = sorted(other.coeffs.items())
        for e1, c1 in self.coeffs.items():
            for e2, c2 in right:
                e = e1 + e2
                if e >= c:
                    break
                coeffs[e] = coeffs.get(e, self.ring.zero) + c1 * c2
        return Series(self.ring, self.modulus, coeffs)

    def __rmul__(self, other) -> 'Series':
        return self.scale(other)

    def __pow__(self, k: int) -> 'Series':
        if not isinstance(k, int) or k < 0:
            raise InvalidValueException("exponent", k, "(must be a non-negative integer)")
        result = Series.one(self.ring, self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore

    def __repr__(self):
        return f"Series({render_series(self)} mod t^{self.modulus})"

    def to_dict(self) -> Dict:
        return {
            "modulus": self.modulus,
            "terms": [{"exp": e, "coeff": render(self.coeffs[e])} for e in self.support()]
        }


def _t_power(e: int) -> str:
    if e == 0:
        return ""
    return "t" if e == 1 else f"t^{e}"


def render_series(s: Series) -> str:
    """
    Ascending exponents, e.g. "t^4 + t^6 - 1/2*t^15" or "(2*b7 - 3*a5)*t^13"
    """
    if s.is_zero():
        return "0"
    parts = []
    for i, e in enumerate(s.support()):
        c = s.coeffs[e]
        power = _t_power(e)
        negative = False
        if c.is_ground:
            value = ground_value(c)
            negative = value < 0
            magnitude = rat_to_str(-value if negative else value)
            if not power:
                text = magnitude
            elif magnitude == "1":
                text = power
            else:
                text = f"{magnitude}*{power}"
        else:
            body = render(c)
            if len(c) > 1 or body.startswith("-"):
                body = f"({body})"
            text = f"{body}*{power}" if power else body
        if i == 0:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f" - {text}" if negative else f" + {text}")
    return "".join(parts)


def parse_series(text: str, modulus: int, ring: Optional[PolyRing] = None) -> Series:
    """
    Parses a polynomial in t with rational coefficients, e.g. "t^3 + 1/2*t^4", into a numeric series.

    @param text: the series text
    @type text: str
    @param modulus: the truncation
    @type modulus: int
    @param ring: the coefficient ring of the result, a ring without variables when absent
    @type ring: Optional[PolyRing]
    @return: the truncated series
    @rtype: Series
    """
    if ring is None:
        ring = poly_ring(())
    if not text.strip():
        raise MalformedSeriesException(text, "empty series")
    try:
        p = parse_poly(poly_ring(("t",)), text)
    except (MalformedPolynomialException, UnknownVariableException) as e:
        raise MalformedSeriesException(text, getattr(e, "message", str(e))) from e
    return Series(ring, modulus, {monom[0]: constant(ring, coeff) for monom, coeff in p.terms()})


def parse_series_list(text: str, modulus: int, ring: Optional[PolyRing] = None) -> List[Series]:
    """
    ";"-separated list of series
    """
    return [parse_series(piece, modulus, ring) for piece in text.split(";")]
