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
Describes a set of types shared by the modules of the package
"""
from enum import Enum


class OutputFormat(Enum):
    """
    The formats the command line front end can print its reports in
    """
    TEXT = "text"
    JSON = "json"


class ReductionMode(Enum):
    """
    Which semigroup powers a reduction is allowed to remove
    """
    FULL = "full"
    SUBSET = "subset"


class InputKind(Enum):
    """
    Helper enum used when parsing user provided text. When a piece of text does not
    match expectations, the enum value is used in the message of the exception being thrown.
    """
    GENERATORS = "generator list"
    POINT = "coefficient point"
    SERIES = "series"
    POLYNOMIAL = "polynomial"
