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
Brute-force verification: the semigroup of a numeric subalgebra of C[t]/(t^c), read off the
reduced row echelon form of the span of all products of its generators.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from rgamma.datatypes.normal_form_template import CoefficientPoint, NormalFormTemplate
from rgamma.datatypes.numerical_semigroup import NumericalSemigroup
from rgamma.datatypes.row_echelon_basis import RowEchelonBasis
from rgamma.exceptions.exceptions import ModulusMismatchException, OrderZeroGeneratorException
from rgamma.normalform import build_template, instantiate
from rgamma.semigroup import from_generators
from rgamma.symcore.poly import constant
from rgamma.symcore.series import Series, render_series

logger = logging.getLogger(__name__)

Vector = List[Fraction]


class _Echelon:
    """
    Incremental reduced row echelon form over the rationals.
    """
    width: int
    rows: Dict[int, Vector]

    def __init__(self, width: int):
        self.width = width
        self.rows = {}

    def insert(self, vector: Vector) -> Optional[int]:
        vector = list(vector)
        for pivot in sorted(self.rows):
            factor = vector[pivot]
            if factor:
                row = self.rows[pivot]
                for col in range(pivot, self.width):
                    if row[col]:
                        vector[col] -= factor * row[col]
        pivot = next((col for col, value in enumerate(vector) if value), None)
        if pivot is None:
            return None
        lead = vector[pivot]
        vector = [value / lead for value in vector]
        for row in self.rows.values():
            factor = row[pivot]
            if factor:
                for col in range(pivot, self.width):
                    if vector[col]:
                        row[col] -= factor * vector[col]
        self.rows[pivot] = vector
        return pivot


def _truncated_product(a: Vector, b: Vector, width: int) -> Vector:
    out = [Fraction(0)] * width
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(width - i):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def _dense_generators(generators: Sequence[Series], c: int) -> List[Tuple[int, Vector]]:
    if not generators:
        raise OrderZeroGeneratorException("the generator list is empty")
    dense = []
    for s in generators:
        if s.modulus < c:
            raise ModulusMismatchException(s.modulus, c)
        vector = [Fraction(0)] * c
        for e, value in s.numeric_coefficients().items():
            if e < c:
                vector[e] = value
        order = next((e for e, value in enumerate(vector) if value), None)
        if order == 0:
            raise OrderZeroGeneratorException(f"{render_series(s)} is a unit")
        if order is not None:
            dense.append((order, vector))
    return dense


def closure_basis(generators: Sequence[Series], c: int) -> RowEchelonBasis:
    """
    Reduced row echelon basis of the subalgebra generated by the series mod t^c, constants included.

    @param generators: numeric series of positive order, truncated at c or beyond
    @type generators: Sequence[Series]
    @param c: the modulus
    @type c: int
    @return: the basis
    @rtype: RowEchelonBasis
    """
    dense = _dense_generators(generators, c)
    echelon = _Echelon(c)
    echelon.insert([Fraction(1)] + [Fraction(0)] * (c - 1))
    count = 0

    # every monomial in the generators of order below c, each multiset visited once
    stack = [(0, 0, None)]
    while stack:
        start, order, product = stack.pop()
        for j in range(start, len(dense)):
            g_order, g_vector = dense[j]
            if order + g_order >= c:
                continue
            nxt = g_vector if product is None else _truncated_product(product, g_vector, c)
            echelon.insert(nxt)
            count += 1
            stack.append((j, order + g_order, nxt))

    ring = generators[0].ring
    pivots = sorted(echelon.rows)
    rows = [Series(ring, c, {e: constant(ring, value) for e, value in enumerate(echelon.rows[p]) if value}) for p in pivots]
    logger.debug("closure mod t^%d: %d products, rank %d", c, count, len(pivots))
    return RowEchelonBasis(rows, pivots)


def subalgebra_closure_semigroup(generators: Sequence[Series], c: int) -> List[int]:
    """
    The orders below c, zero excluded, of the elements of the generated subalgebra.
    """
    return [p for p in closure_basis(generators, c).pivot_orders if p > 0]


def canonical_normal_form(generators: Sequence[Series], c: int) -> List[Series]:
    """
    The unique normal-form generators of the subalgebra: the echelon rows at the minimal
    generators of its semigroup, and the zero series for minimal generators at or above c.
    """
    basis = closure_basis(generators, c)
    orders = [p for p in basis.pivot_orders if p > 0]
    detected = from_generators(orders + list(range(c, 2 * c)))
    ring = generators[0].ring
    return [basis.row(v) if v < c else Series.zero(ring, c) for v in detected.generators]


def verify_point(semigroup: NumericalSemigroup, point: CoefficientPoint, template: Optional[NormalFormTemplate] = None) -> bool:
    """
    Whether the subalgebra generated by the normal-form generators at the point has semigroup Gamma.
    """
    template = template or build_template(semigroup)
    closure = subalgebra_closure_semigroup(instantiate(template, point), template.modulus)
    return closure == list(semigroup.elements_below_c)
