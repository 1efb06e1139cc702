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

from rgamma.type import InputKind


class MalformedInputException(Exception):
    """Exception for user provided text that cannot be parsed."""
    def __init__(self, kind: InputKind, text, reason=""):
        self.message = f'The {kind.value} \"{text}\" is malformed'
        if reason:
            self.message += f": {reason}"
        super().__init__(self.message)


class MalformedGeneratorsException(MalformedInputException):
    def __init__(self, text, reason=""):
        super().__init__(InputKind.GENERATORS, text, reason)


class MalformedPointException(MalformedInputException):
    def __init__(self, text, reason=""):
        super().__init__(InputKind.POINT, text, reason)


class MalformedSeriesException(MalformedInputException):
    def __init__(self, text, reason=""):
        super().__init__(InputKind.SERIES, text, reason)


class MalformedPolynomialException(MalformedInputException):
    ...
