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
Command line front end: rgamma <command> GENS [options]
"""
import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from rgamma.analysis import analyze, self_check
from rgamma.deceptive import enumerate_sdec_below_conductor, generator_names, idec_generators_3gen
from rgamma.exceptions.exceptions import RGammaException
from rgamma.exceptions.malformed_input import MalformedGeneratorsException, MalformedInputException
from rgamma.exceptions.variety import OracleDisagreementException
from rgamma.helper_functions import parse_generators, parse_point
from rgamma.normalform import build_template, make_point
from rgamma.oracle import canonical_normal_form, subalgebra_closure_semigroup, verify_point
from rgamma.semigroup import ambient_dimension, from_generators, is_plane_semigroup
from rgamma.symcore.poly import rat_to_str, render
from rgamma.symcore.series import parse_series_list, render_series
from rgamma.type import OutputFormat
from rgamma.variety import defining_equations, eliminate_linear, membership, plane_leading_coefficient, plane_test_3gen

logger = logging.getLogger(__name__)

Outcome = Tuple[Dict, List[str], int]


def _generators_argument(text: str) -> List[int]:
    try:
        return parse_generators(text)
    except MalformedGeneratorsException as e:
        raise argparse.ArgumentTypeError(e.message) from e


def _plane_lines(report) -> List[str]:
    verdict = "holds" if report.is_plane else "fails"
    lines = [f"plane criterion: {verdict} (e = {', '.join(map(str, report.e_sequence))})"]
    if not report.condition_i_holds:
        lines.append("  gcd sequence does not decrease strictly to 1")
    for i in report.condition_ii_failures:
        lines.append(f"  v_{i} does not exceed lcm(e_{i - 2}, v_{i - 1})")
    return lines


def _cmd_semigroup(args) -> Outcome:
    semigroup = from_generators(args.generators)
    criterion = is_plane_semigroup(semigroup)
    data = semigroup.to_dict()
    data["ambient_dim"] = ambient_dimension(semigroup)
    data["plane_criterion"] = criterion.to_dict()
    lines = [
        f"semigroup {semigroup!r}",
        f"conductor: {semigroup.conductor}",
        f"gaps ({len(semigroup.gaps)}): {', '.join(map(str, semigroup.gaps))}",
        f"ambient dimension M: {data['ambient_dim']}",
    ] + _plane_lines(criterion)
    return data, lines, 0


def _cmd_template(args) -> Outcome:
    semigroup = from_generators(args.generators)
    template = build_template(semigroup)
    names = generator_names(semigroup)
    lines = [f"{name}(t) = {render_series(s)}" for name, s in zip(names, template.generators)]
    lines.append(f"variables ({len(template.variables)}): {', '.join(template.variables)}")
    return template.to_dict(), lines, 0


def _cmd_sdec(args) -> Outcome:
    semigroup = from_generators(args.generators)
    binomials = enumerate_sdec_below_conductor(semigroup)
    names = generator_names(semigroup)
    data: Dict = {"semigroup": list(semigroup.generators), "conductor": semigroup.conductor,
                  "binomials": [b.to_dict() for b in binomials]}
    lines = [f"{b.render(names)}  (degree {b.degree})" for b in binomials] or ["S_dec below the conductor is empty"]
    if len(semigroup.generators) == 3:
        idec = idec_generators_3gen(semigroup)
        data["idec_generators"] = idec.to_dict(semigroup.conductor)
        lines.append("deceptive ideal generators: " + ", ".join(f.render(names) for f in idec.binomials))
    return data, lines, 0


def _equation_lines(presentation) -> List[str]:
    names = presentation.generator_names
    return [f"{presentation.label(eq)} from {eq.source.render(names)}: {render(eq.poly)}" for eq in presentation.equations]


def _cmd_equations(args) -> Outcome:
    presentation = defining_equations(from_generators(args.generators))
    lines = [f"{len(presentation.equations)} equations in {presentation.ambient_dim} variables"]
    return presentation.to_dict(), lines + _equation_lines(presentation), 0


def _cmd_analyze(args) -> Outcome:
    report = analyze(from_generators(args.generators), args.seed)
    data = report.to_dict()
    elimination = report.elimination
    lines = [
        f"semigroup {report.semigroup!r}: conductor {report.semigroup.conductor}, "
        f"{len(report.semigroup.gaps)} gaps, M = {report.ambient_dim}",
    ] + _plane_lines(report.plane_criterion)
    stratum = report.plane_criterion.stratum
    if stratum is not None:
        condition = f" ({render(stratum.leading_coefficient)} != 0)" if stratum.coordinate else ""
        lines.append(f"plane stratum: {stratum.description}{condition}")
    lines += [f"S_dec below the conductor: {len(report.binomials)} binomials"] + _equation_lines(report.presentation)
    for name, expression in elimination.solved:
        lines.append(f"solved {name} = {render(expression)}")
    for residual in elimination.residual:
        lines.append(f"residual: {render(residual)}")
    if elimination.affine_dim is not None:
        lines.append(f"affine space of dimension {elimination.affine_dim}")
    else:
        lines.append("no affine space identification: residual equations remain")
    if report.predicted_dim is not None:
        lines.append(f"single binomial dimension formula: {report.predicted_dim}")
    if report.self_check is not None:
        check = report.self_check
        lines.append(f"self check (seed {check.seed}): {check.checked} points, "
                     f"{'passed' if check.passed else 'FAILED'}")
        if not check.passed:
            raise OracleDisagreementException(check.disagreements[0]["equations"], check.disagreements[0]["oracle"],
                                              str(check.disagreements[0]["point"]))
    return data, lines, 0


def _cmd_check(args) -> Outcome:
    semigroup = from_generators(args.generators)
    presentation = defining_equations(semigroup)
    point = make_point(presentation.template, parse_point(args.point), default=0)
    report = membership(semigroup, point, presentation)
    data = report.to_dict()
    if args.oracle:
        observed = verify_point(semigroup, point, presentation.template)
        data["oracle"] = observed
        if observed != report.in_variety:
            raise OracleDisagreementException(report.in_variety, observed, repr(point))
    if args.seed is not None:
        elimination = eliminate_linear(presentation)
        if elimination.affine_dim is not None:
            check = self_check(presentation, elimination, args.seed)
            data["self_check"] = check.to_dict()
            if not check.passed:
                raise OracleDisagreementException(check.disagreements[0]["equations"], check.disagreements[0]["oracle"],
                                                  str(check.disagreements[0]["point"]))
    if report.in_variety:
        return data, ["in R_Γ"], 0
    return data, [f"NOT in R_Γ; violated: {', '.join(report.violated)}"], 1


def _cmd_plane(args) -> Outcome:
    semigroup = from_generators(args.generators)
    criterion = is_plane_semigroup(semigroup)
    data: Dict = {"plane_criterion": criterion.to_dict()}
    lines = _plane_lines(criterion)
    if len(semigroup.generators) == 3 and args.point is None:
        coefficient = plane_leading_coefficient(semigroup)
        data["leading_coefficient"] = render(coefficient)
        lines.append(f"t^{semigroup.generators[2]} coefficient of the restricted reduction: {render(coefficient)}")
    if args.point is not None:
        presentation = defining_equations(semigroup)
        point = make_point(presentation.template, parse_point(args.point), default=0)
        report = plane_test_3gen(semigroup, point, presentation)
        data["point"] = report.to_dict()
        lines.append(f"plane point: {'yes' if report.is_plane_point else 'no'} "
                     f"(t^{semigroup.generators[2]} coefficient {rat_to_str(report.leading_coefficient)})")
    return data, lines, 0


def _cmd_normalize(args) -> Outcome:
    series = parse_series_list(args.series, args.mod)
    normal = canonical_normal_form(series, args.mod)
    orders = subalgebra_closure_semigroup(series, args.mod)
    detected = from_generators(orders + list(range(args.mod, 2 * args.mod)))
    data = {"modulus": args.mod, "semigroup": list(detected.generators), "generators": [s.to_dict() for s in normal]}
    lines = [f"semigroup {detected!r}"] + [render_series(s) for s in normal]
    return data, lines, 0


_COMMANDS: Dict[str, Tuple[Callable[..., Outcome], str]] = {
    "semigroup": (_cmd_semigroup, "conductor, gaps, ambient dimension and plane criterion"),
    "template": (_cmd_template, "normal-form generators and coordinates"),
    "sdec": (_cmd_sdec, "deceptive binomials below the conductor"),
    "equations": (_cmd_equations, "defining equations of the moduli space"),
    "analyze": (_cmd_analyze, "everything, with linear elimination"),
    "check": (_cmd_check, "membership of a point"),
    "plane": (_cmd_plane, "plane criterion and plane stratum test"),
    "normalize": (_cmd_normalize, "canonical normal form of a numeric subalgebra"),
}


def _common_options(parser: argparse.ArgumentParser, suppress: bool):
    def default(value):
        return argparse.SUPPRESS if suppress else value
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=default(OutputFormat.TEXT.value),
                        help="output format (default: text)")
    parser.add_argument("--seed", type=int, default=default(None), help="seed of the randomized self checks")
    parser.add_argument("--verbose", action="store_true", default=default(False), help="debug logging")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rgamma", description="Moduli of complete subalgebras with a given numerical semigroup.")
    _common_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _common_options(common, suppress=True)
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    for name, (_, description) in _COMMANDS.items():
        sub = commands.add_parser(name, help=description, description=description, parents=[common])
        if name == "normalize":
            sub.add_argument("--series", required=True, help='";"-separated series, e.g. "t^3+t^4+t^5;t^5"')
            sub.add_argument("--mod", type=int, required=True, help="truncation modulus c")
            continue
        sub.add_argument("generators", type=_generators_argument, help="comma separated generators, e.g. 4,6,13")
        if name == "check":
            sub.add_argument("--point", default="", help="name=value pairs, unset variables are 0")
            sub.add_argument("--oracle", action="store_true", help="also run the brute-force closure")
        elif name == "plane":
            sub.add_argument("--point", default=None, help="name=value pairs, unset variables are 0")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    @param argv: the arguments, without the program name
    @type argv: Optional[Sequence[str]]
    @return: 0 on success, 1 on a domain error, 2 on a usage error
    @rtype: int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s")
    if args.command == "normalize" and args.mod < 1:
        print(f"rgamma {args.command}: error: argument --mod: must be positive, got {args.mod}", file=sys.stderr)
        return 2

    handler, _ = _COMMANDS[args.command]
    try:
        data, lines, status = handler(args)
    except MalformedInputException as e:
        print(f"rgamma {args.command}: error: {e.message}", file=sys.stderr)
        return 2
    except RGammaException as e:
        print(f"rgamma {args.command}: {e.message}", file=sys.stderr)
        return 1

    if OutputFormat(args.format) == OutputFormat.JSON:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return status


def main():
    sys.exit(run())
