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
The moduli space of a semigroup as an affine variety: defining equations from the deceptive
binomials below the conductor, greedy linear elimination, point membership and the plane
stratum test for three generators.
"""
import logging
import random
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from rgamma.datatypes.deceptive_binomial import DeceptiveBinomial, GenMonomial
from rgamma.datatypes.normal_form_template import CoefficientPoint, NormalFormTemplate
from rgamma.datatypes.numerical_semigroup import NumericalSemigroup
from rgamma.datatypes.plane_criterion_report import PlaneStratum
from rgamma.datatypes.variety_presentation import EliminationResult, Equation, MembershipReport, PlaneTestReport, \
    VarietyPresentation
from rgamma.deceptive import binomial_poly, enumerate_sdec_below_conductor, generator_names, generator_ring
from rgamma.exceptions.exceptions import InvalidValueException, WrongGeneratorCountException
from rgamma.exceptions.variety import NotInVarietyException
from rgamma.helper_functions import random_rational
from rgamma.normalform import build_template, instantiate, make_point, variable_weights
from rgamma.reduction import MonomialSeriesCache, phi_eval, reduce, reduce_subset
from rgamma.semigroup import ambient_dimension, is_plane_semigroup
from rgamma.symcore.poly import Poly, extract_linear, ground_value, occurring_variables, poly_eval, poly_substitute, \
    render, scalar_mul
from rgamma.symcore.series import Series

logger = logging.getLogger(__name__)


def defining_equations(semigroup: NumericalSemigroup, template: Optional[NormalFormTemplate] = None) -> VarietyPresentation:
    """
    One equation per gap coefficient surviving the reduction of phi(f), for every f in S_dec
    below the conductor. Equations are ordered by (binomial degree, lhs, rhs, gap) and
    syntactically deduplicated.

    @param semigroup: the semigroup
    @type semigroup: NumericalSemigroup
    @param template: its normal-form template, built when absent
    @type template: Optional[NormalFormTemplate]
    @return: the presentation
    @rtype: VarietyPresentation
    """
    template = template or build_template(semigroup)
    binomials = enumerate_sdec_below_conductor(semigroup)
    xring = generator_ring(semigroup)
    cache = MonomialSeriesCache(template.generators)

    equations: List[Equation] = []
    seen = set()
    for binomial in binomials:
        image = phi_eval(template.generators, binomial_poly(binomial, xring), cache)
        trace = reduce(semigroup, template.generators, image, cache)
        for gap in trace.reduced.support():
            poly = trace.reduced.coefficient(gap)
            key = render(poly)
            if key in seen:
                continue
            seen.add(key)
            equations.append(Equation(binomial, gap, poly))
    equations.sort(key=Equation.sort_key)
    logger.debug("%r: %d binomials, %d equations", semigroup, len(binomials), len(equations))
    return VarietyPresentation(semigroup, template, ambient_dimension(semigroup), binomials, equations,
                               generator_names(semigroup))


def _find_linear(pending: List[Poly], variable_order: List[str]) -> Optional[Tuple[int, str, Poly]]:
    for index, equation in enumerate(pending):
        present = set(occurring_variables(equation))
        for name in variable_order:
            if name not in present:
                continue
            found = extract_linear(equation, name)
            if found is not None:
                alpha, rest = found
                return index, name, scalar_mul(rest, -1 / alpha)
    return None


def eliminate_linear(presentation: VarietyPresentation, rng: Optional[random.Random] = None) -> EliminationResult:
    """
    Repeatedly solves the first equation, in tag order, that is linear with a constant coefficient
    in some variable, and substitutes the solution everywhere. Variables are tried from the last
    generator's highest gap backwards.

    @param presentation: the equations
    @type presentation: VarietyPresentation
    @param rng: when provided, the equation and variable scan orders are shuffled with it
    @type rng: Optional[random.Random]
    @return: the solved variables and the residual equations
    @rtype: EliminationResult
    """
    pending = [equation.poly for equation in presentation.equations]
    variable_order = list(reversed(presentation.template.variables))
    if rng is not None:
        rng.shuffle(pending)
        rng.shuffle(variable_order)

    solved: List[Tuple[str, Poly]] = []
    while True:
        found = _find_linear(pending, variable_order)
        if found is None:
            break
        index, name, expression = found
        logger.debug("solving %s = %s", name, render(expression))
        pending.pop(index)
        pending = [p for p in (poly_substitute(p, name, expression) for p in pending) if p]
        solved = [(other, poly_substitute(e, name, expression)) for other, e in solved]
        solved.append((name, expression))
    return EliminationResult(solved, pending, presentation.ambient_dim)


def _with_coefficient(s: Series, exponent: int, value: Poly) -> Series:
    coeffs = dict(s.coeffs)
    coeffs[exponent] = value
    return Series(s.ring, s.modulus, coeffs)


def _equation_at(semigroup: NumericalSemigroup, generators: List[Series], binomial: DeceptiveBinomial, gap: int,
                 caches: Dict[int, Tuple[List[Series], MonomialSeriesCache]]) -> Poly:
    # the coefficient of t^gap only depends on the generators mod t^(gap + 1)
    modulus = gap + 1
    if modulus not in caches:
        truncated = [s.truncate(modulus) for s in generators]
        caches[modulus] = (truncated, MonomialSeriesCache(truncated))
    truncated, cache = caches[modulus]
    image = phi_eval(truncated, binomial_poly(binomial, generator_ring(semigroup)), cache)
    return reduce(semigroup, truncated, image, cache).reduced.coefficient(gap)


def eliminate_graded(semigroup: NumericalSemigroup, template: Optional[NormalFormTemplate] = None) -> EliminationResult:
    """
    Linear elimination carried out weight by weight, without first writing the defining equations
    in every template variable.

    The equation at gap delta of a binomial of degree d is weighted homogeneous of weight
    delta - d: it only involves variables of weight at most delta - d, and those of weight exactly
    delta - d only through a linear term with a constant coefficient. Weight w is therefore a
    linear system in the weight-w variables, once the solutions found for the lighter ones are
    written into the generators. Equations with no weight-w variable left are residual.

    @param semigroup: the semigroup
    @type semigroup: NumericalSemigroup
    @param template: its normal-form template, built when absent
    @type template: Optional[NormalFormTemplate]
    @return: the solved variables, as expressions in the free ones, and the residual equations
    @rtype: EliminationResult
    """
    template = template or build_template(semigroup)
    binomials = enumerate_sdec_below_conductor(semigroup)
    weights = variable_weights(template)
    gaps = set(semigroup.gaps)
    generators = list(template.generators)
    solved: List[Tuple[str, Poly]] = []
    residual: List[Poly] = []

    top = semigroup.conductor - 1 - min((b.degree for b in binomials), default=semigroup.conductor)
    for weight in range(1, top + 1):
        caches: Dict[int, Tuple[List[Series], MonomialSeriesCache]] = {}
        pending = []
        for binomial in binomials:
            gap = binomial.degree + weight
            if gap in gaps:
                poly = _equation_at(semigroup, generators, binomial, gap, caches)
                if poly:
                    pending.append(poly)

        own = [name for name in reversed(template.variables) if weights[name] == weight]
        round_solved: List[Tuple[str, Poly]] = []
        while True:
            found = _find_linear(pending, own)
            if found is None:
                break
            index, name, expression = found
            pending.pop(index)
            pending = [p for p in (poly_substitute(p, name, expression) for p in pending) if p]
            round_solved = [(other, poly_substitute(e, name, expression)) for other, e in round_solved]
            round_solved.append((name, expression))

        for name, expression in round_solved:
            i, delta = template.slot_of(name)
            generators[i] = _with_coefficient(generators[i], delta, expression)
        solved.extend(round_solved)
        residual.extend(pending)
        logger.debug("%r, weight %d: %d solved, %d residual", semigroup, weight, len(round_solved), len(pending))
    return EliminationResult(solved, residual, ambient_dimension(semigroup))


def predicted_dim_single_binomial(semigroup: NumericalSemigroup) -> Optional[int]:
    """
    M(Gamma) minus the number of gaps above d, when S_dec below the conductor is a single
    binomial of degree d.
    """
    binomials = enumerate_sdec_below_conductor(semigroup)
    if len(binomials) != 1:
        return None
    d = binomials[0].degree
    return ambient_dimension(semigroup) - sum(1 for delta in semigroup.gaps if delta > d)


def membership(semigroup: NumericalSemigroup, point: CoefficientPoint,
               presentation: Optional[VarietyPresentation] = None) -> MembershipReport:
    presentation = presentation or defining_equations(semigroup)
    values = {}
    violated = []
    for equation in presentation.equations:
        label = presentation.label(equation)
        values[label] = poly_eval(equation.poly, point.assignment)
        if values[label] != 0:
            violated.append(label)
    return MembershipReport(violated, values)


def _plane_binomial(semigroup: NumericalSemigroup) -> DeceptiveBinomial:
    # y^(L/v1) - x^(L/v0), L = lcm(v0, v1): the k1, k0 binomial whenever the semigroup is plane
    v0, v1, _ = semigroup.generators
    lcm = v0 * v1 // gcd(v0, v1)
    weights = semigroup.generators
    return DeceptiveBinomial(GenMonomial((0, lcm // v1, 0), weights), GenMonomial((lcm // v0, 0, 0), weights))


def _check_three_generators(semigroup: NumericalSemigroup):
    if len(semigroup.generators) != 3:
        raise WrongGeneratorCountException(3, len(semigroup.generators))


def plane_leading_coefficient(semigroup: NumericalSemigroup, template: Optional[NormalFormTemplate] = None) -> Poly:
    """
    The symbolic coefficient of t^{v_2} after reducing phi(y^(L/v1) - x^(L/v0)) with x and y only.
    """
    _check_three_generators(semigroup)
    template = template or build_template(semigroup)
    f = binomial_poly(_plane_binomial(semigroup), generator_ring(semigroup))
    trace = reduce_subset(semigroup, (0, 1), template.generators, phi_eval(template.generators, f))
    return trace.reduced.coefficient(semigroup.generators[2])


def plane_test_3gen(semigroup: NumericalSemigroup, point: CoefficientPoint,
                    presentation: Optional[VarietyPresentation] = None) -> PlaneTestReport:
    """
    Decides whether the subalgebra at a point of the moduli space is generated by two elements,
    i.e. lies on the plane stratum.

    @param semigroup: a semigroup with three minimal generators
    @type semigroup: NumericalSemigroup
    @param point: a point satisfying the defining equations
    @type point: CoefficientPoint
    @param presentation: the defining equations, computed when absent
    @type presentation: Optional[VarietyPresentation]
    @return: the verdict and the coefficient of t^{v_2}
    @rtype: PlaneTestReport
    """
    _check_three_generators(semigroup)
    presentation = presentation or defining_equations(semigroup)
    report = membership(semigroup, point, presentation)
    if not report.in_variety:
        raise NotInVarietyException(report.violated)

    generators = instantiate(presentation.template, point)
    f = binomial_poly(_plane_binomial(semigroup), generator_ring(semigroup))
    trace = reduce_subset(semigroup, (0, 1), generators, phi_eval(generators, f))
    v2 = semigroup.generators[2]
    order = trace.reduced.order()
    criterion = is_plane_semigroup(semigroup).is_plane
    return PlaneTestReport(criterion and order == v2, ground_value(trace.reduced.coefficient(v2)), order, criterion)


def sample_point(presentation: VarietyPresentation, elimination: EliminationResult, rng: random.Random,
                 on_variety: bool = True) -> CoefficientPoint:
    """
    Random rational values for the free variables, the solved variables evaluated from them.
    Off the variety, one solved variable is shifted by a nonzero rational.
    """
    if elimination.residual:
        raise InvalidValueException("elimination", repr(elimination), "(points can only be sampled when no equation is left)")
    solved_names = set(elimination.solved_variables)
    values: Dict[str, Fraction] = {name: random_rational(rng) for name in presentation.template.variables if name not in solved_names}
    for name, expression in elimination.solved:
        values[name] = poly_eval(expression, values)
    if not on_variety:
        if not elimination.solved:
            raise InvalidValueException("elimination", repr(elimination), "(every point lies on the variety)")
        name = rng.choice(elimination.solved_variables)
        values[name] = values[name] + random_rational(rng, nonzero=True)
    return make_point(presentation.template, values)


def plane_stratum(semigroup: NumericalSemigroup, elimination: EliminationResult,
                  template: Optional[NormalFormTemplate] = None) -> PlaneStratum:
    """
    The plane stratum inside the affine space of the free coordinates: empty when the plane
    criterion fails, and otherwise the points where the t^{v_2} leading coefficient, with the
    solved variables written in the free ones, does not vanish. A leading coefficient linear in
    some free coordinate is itself a coordinate, which makes the stratum C* x C^(N - 1).
    """
    _check_three_generators(semigroup)
    if not is_plane_semigroup(semigroup).is_plane:
        return PlaneStratum(None, "empty")
    dimension = elimination.affine_dim
    if dimension is None:
        raise InvalidValueException("elimination", repr(elimination), "(the plane stratum needs a complete elimination)")
    leading = plane_leading_coefficient(semigroup, template)
    for name, expression in elimination.solved:
        leading = poly_substitute(leading, name, expression)
    if not leading:
        return PlaneStratum(leading, "empty")
    if leading.is_ground:
        return PlaneStratum(leading, f"C^{dimension}")
    for name in reversed(occurring_variables(leading)):
        if extract_linear(leading, name) is not None:
            return PlaneStratum(leading, f"C* x C^{dimension - 1}", name)
    return PlaneStratum(leading, f"complement of a hypersurface in C^{dimension}")
