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

import pytest

from rgamma.normalform import build_template, instantiate, make_point
from rgamma.semigroup import from_generators
from rgamma.variety import defining_equations, eliminate_linear


@pytest.fixture(scope="session")
def gamma_4_6_13():
    return from_generators([4, 6, 13])


@pytest.fixture(scope="session")
def template_4_6_13(gamma_4_6_13):
    return build_template(gamma_4_6_13)


@pytest.fixture(scope="session")
def presentation_4_6_13(gamma_4_6_13, template_4_6_13):
    return defining_equations(gamma_4_6_13, template_4_6_13)


@pytest.fixture(scope="session")
def elimination_4_6_13(presentation_4_6_13):
    return eliminate_linear(presentation_4_6_13)


@pytest.fixture(scope="session")
def numeric_generators_4_6_13(template_4_6_13):
    # (t^4, t^6 + t^7, t^13)
    return instantiate(template_4_6_13, make_point(template_4_6_13, {"b7": 1}, default=0))


@pytest.fixture(scope="session")
def gamma_9_16_19():
    return from_generators([9, 16, 19])


@pytest.fixture(scope="session")
def presentation_9_16_19(gamma_9_16_19):
    return defining_equations(gamma_9_16_19)


@pytest.fixture(scope="session")
def gamma_8_9_10_11():
    return from_generators([8, 9, 10, 11])


@pytest.fixture(scope="session")
def presentation_8_9_10_11(gamma_8_9_10_11):
    return defining_equations(gamma_8_9_10_11)


@pytest.fixture(scope="session")
def gamma_4_6_11():
    return from_generators([4, 6, 11])
