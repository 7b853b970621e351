# Copyright 2026 The falqon Authors
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
"""Feedback-based quantum optimization for MaxCut on a dense statevector."""

from ._core import (
    GenerationFailure,
    Graph,
    NumericalFailure,
    ParseError,
    RunTrace,
    aggregate,
    cut_value,
    erdos_renyi,
    ground_energy,
    lipschitz_bound,
    max_cut_brute_force,
    maxcut_diagonal,
    random_regular,
    read_edge_list,
    replay_fidelity,
    run,
    success_probability,
    trajectory,
)

__version__ = "0.1.0"

__all__ = [
    "GenerationFailure",
    "Graph",
    "NumericalFailure",
    "ParseError",
    "RunTrace",
    "aggregate",
    "cut_value",
    "erdos_renyi",
    "ground_energy",
    "lipschitz_bound",
    "max_cut_brute_force",
    "maxcut_diagonal",
    "random_regular",
    "read_edge_list",
    "replay_fidelity",
    "run",
    "success_probability",
    "trajectory",
]
