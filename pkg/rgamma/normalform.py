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
Normal-form generators of a semigroup and the coordinates of the ambient affine space.
"""
import logging
from string import ascii_lowercase
from typing import Dict, Mapping, Optional, Sequence, List

from rgamma.datatypes.normal_form_template import CoefficientPoint, NormalFormTemplate
from rgamma.datatypes.numerical_semigroup import NumericalSemigroup
from rgamma.exceptions.exceptions import InvalidValueException, UnboundVariableException
from rgamma.symcore.poly import Poly, RatLike, constant, poly_ring, to_fraction, variable_names
from rgamma.symcore.series import Series

logger = logging.getLogger(__name__)


def canonical_name(index: int, delta: int) -> str:
    return f"g{index}d{delta}"


def display_name(index: int, delta: int, generator_count: int) -> str:
    if generator_count <= len(ascii_lowercase):
        return f"{ascii_lowercase[index]}{delta}"
    return canonical_name(index, delta)


def build_template(semigroup: NumericalSemigroup) -> NormalFormTemplate:
    """
    Builds the generic normal-form generators of a semigroup, one indeterminate per
    (generator, gap above it) slot. Generators at or above the conductor vanish mod t^c.

    @param semigroup: the semigroup
    @type semigroup: NumericalSemigroup
    @return: the template
    @rtype: NormalFormTemplate
    """
    modulus = max(semigroup.conductor, 1)
    count = len(semigroup.generators)
    slots = [(i, delta) for i, v in enumerate(semigroup.generators) for delta in semigroup.gaps if delta > v]
    variables = [display_name(i, delta, count) for i, delta in slots]
    canonical = [canonical_name(i, delta) for i, delta in slots]
    ring = poly_ring(variables)

    generators = []
    for i, v in enumerate(semigroup.generators):
        if v >= modulus:
            generators.append(Series.zero(ring, modulus))
            continue
        coeffs: Dict[int, Poly] = {v: ring.one}
        for k, (j, delta) in enumerate(slots):
            if j == i:
                coeffs[delta] = ring.gens[k]
        generators.append(Series(ring, modulus, coeffs))

    logger.debug("template for %r: %d variables mod t^%d", semigroup, len(variables), modulus)
    return NormalFormTemplate(semigroup, modulus, ring, generators, variables, canonical, slots)


def make_point(template: NormalFormTemplate, values: Mapping[str, RatLike], default: Optional[RatLike] = None) -> CoefficientPoint:
    """
    Builds a point from values keyed by display alias or canonical name.
    With a default, every variable left out takes it; otherwise a missing variable is an error.
    """
    assignment = {}
    for name, value in values.items():
        resolved = template.resolve(name)
        value = to_fraction(value)
        if resolved in assignment and assignment[resolved] != value:
            raise InvalidValueException("assignment", name, f"(conflicts with {resolved}={assignment[resolved]})")
        assignment[resolved] = value
    for name in template.variables:
        if name not in assignment:
            if default is None:
                raise UnboundVariableException(name)
            assignment[name] = to_fraction(default)
    return CoefficientPoint({name: assignment[name] for name in template.variables})


def zero_point(template: NormalFormTemplate) -> CoefficientPoint:
    return make_point(template, {}, default=0)


def instantiate(template: NormalFormTemplate, point: CoefficientPoint) -> List[Series]:
    """
    Substitutes the point into the template; the resulting series have constant coefficients.
    """
    result = []
    for i, generator in enumerate(template.generators):
        if generator.is_zero():
            result.append(generator)
            continue
        v = template.semigroup.generators[i]
        coeffs = {v: template.ring.one}
        for name, (j, delta) in zip(template.variables, template.slots):
            if j != i:
                continue
            if name not in point:
                raise UnboundVariableException(name)
            coeffs[delta] = constant(template.ring, point[name])
        result.append(Series(template.ring, template.modulus, coeffs))
    return result


def is_normal_form(series_list: Sequence[Series], semigroup: NumericalSemigroup) -> bool:
    """
    Whether each series is t^{v_i} plus terms at gaps above v_i only (zero when v_i >= modulus).
    """
    if len(series_list) != len(semigroup.generators):
        return False
    gaps = set(semigroup.gaps)
    for v, s in zip(semigroup.generators, series_list):
        if v >= s.modulus:
            if not s.is_zero():
                return False
            continue
        if s.order() != v or s.coefficient(v) != s.ring.one:
            return False
        if any(e > v and e not in gaps for e in s.support()):
            return False
    return True


def variable_weights(template: NormalFormTemplate) -> Dict[str, int]:
    """
    Weight delta - v_i of the coefficient of t^delta in x_i(t). Under t -> lambda*t followed by
    rescaling the generators, a variable of weight w is multiplied by lambda^w.
    """
    return {name: delta - template.semigroup.generators[i] for name, (i, delta) in zip(template.variables, template.slots)}


def weighted_homogeneous_degree(p: Poly, weights: Mapping[str, int]) -> Optional[int]:
    """
    @return: the common weight of all terms of p, None if p is zero or not homogeneous
    @rtype: Optional[int]
    """
    names = variable_names(p.ring)
    degrees = {sum(e * weights[name] for name, e in zip(names, monom) if e) for monom in p.itermonoms()}
    return degrees.pop() if len(degrees) == 1 else None
