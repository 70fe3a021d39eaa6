# Copyright 2026 The compnet Authors
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
"""Computation-flow analysis: max flow, cuts and interdiction."""

from ._core import (
    Error,
    Network,
    ParseError,
    SolverError,
    ValidationError,
    budget_grid,
    budget_sweep,
    fixture,
    fixture_names,
    gen_abilene,
    interdict,
    max_flow,
    min_cut,
)

__all__ = [
    "Error",
    "Network",
    "ParseError",
    "SolverError",
    "ValidationError",
    "budget_grid",
    "budget_sweep",
    "fixture",
    "fixture_names",
    "gen_abilene",
    "interdict",
    "max_flow",
    "min_cut",
]
