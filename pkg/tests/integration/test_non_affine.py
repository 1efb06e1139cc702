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

from rgamma.semigroup import ambient_dimension, from_generators
from rgamma.symcore.poly import occurring_variables
from rgamma.variety import eliminate_graded


@pytest.mark.slow
def test_singular_hypersurface_keeps_a_residual_equation():
    semigroup = from_generators([9, 12, 15, 25, 28, 31])
    elimination = eliminate_graded(semigroup)
    solved = set(elimination.solved_variables)

    assert semigroup.conductor == 48
    assert elimination.ambient_dim == ambient_dimension(semigroup)
    assert elimination.solved
    assert elimination.residual
    assert elimination.affine_dim is None
    assert all(not solved.intersection(occurring_variables(p)) for p in elimination.residual)
