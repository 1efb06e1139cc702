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
Helper functions
"""
import random
from fractions import Fraction
from typing import Dict, List

from rgamma.exceptions.malformed_input import MalformedGeneratorsException, MalformedPointException


def parse_generators(text: str) -> List[int]:
    """
    Parses a comma separated list of positive integers, e.g. "4,6,13"
    @param text: the generator list
    @type text: str
    @return: the integers, in the given order
    @rtype: List[int]
    @raise MalformedGeneratorsException
    """
    pieces = [piece.strip() for piece in text.split(",")]
    if not text.strip() or any(not piece for piece in pieces):
        raise MalformedGeneratorsException(text, "expected comma separated integers")
    try:
        values = [int(piece) for piece in pieces]
    except ValueError as e:
        raise MalformedGeneratorsException(text, "expected comma separated integers") from e
    if any(v <= 0 for v in values):
        raise MalformedGeneratorsException(text, "generators are positive")
    return values


def parse_point(text: str) -> Dict[str, Fraction]:
    """
    Parses "b7=1,b9=1/2" into variable name -> rational. Names are not resolved here.
    @raise MalformedPointException
    """
    values: Dict[str, Fraction] = {}
    if not text.strip():
        return values
    for piece in text.split(","):
        name, sep, value = piece.partition("=")
        if not sep or not name.strip() or not value.strip():
            raise MalformedPointException(text, f"expected name=value, got \"{piece}\"")
        try:
            values[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise MalformedPointException(text, f"\"{value.strip()}\" is not a rational number") from e
    return values


def random_rational(rng: random.Random, bound: int = 3, denominator: int = 3, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, denominator))
        if value or not nonzero:
            return value
