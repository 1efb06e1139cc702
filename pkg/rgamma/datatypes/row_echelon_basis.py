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

from rgamma.symcore.series import Series


class RowEchelonBasis:
    """
    A basis of a subspace of C[t]/(t^c) in reduced row echelon form with respect to 1, t, ..., t^{c-1}:
    each row is monic at its pivot, and zero at every other pivot.
    """
    rows: List[Series]
    pivot_orders: List[int]

    def __init__(self, rows: List[Series], pivot_orders: List[int]):
        self.rows = rows
        self.pivot_orders = pivot_orders

    @property
    def rank(self) -> int:
        return len(self.rows)

    def row(self, pivot: int) -> Series:
        return self.rows[self.pivot_orders.index(pivot)]

    def __repr__(self):
        return f"RowEchelonBasis(pivots={self.pivot_orders})"
