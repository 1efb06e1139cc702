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

from typing import List

from rgamma.exceptions.exceptions import RGammaException


class VarietyException(RGammaException):
    ...


class NotInVarietyException(VarietyException):
    def __init__(self, violated: List[str]):
        super().__init__("The point does not lie on the moduli space, violated equations: "
                         f"{', '.join(violated)}")


class OracleDisagreementException(VarietyException):
    def __init__(self, equations_say: bool, oracle_says: bool, point_description: str):
        super().__init__(f"Equation evaluation ({'member' if equations_say else 'not a member'}) and "
                         f"the brute-force closure ({'member' if oracle_says else 'not a member'}) "
                         f"disagree at {point_description}")
