# Copyright 2026 The fqsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Sequential quaternion-gate time evolution on a statevector simulator."""

from fqsim._core import (
    Ansatz,
    ArgumentError,
    ContractViolation,
    Error,
    GateParam,
    Hamiltonian,
    __version__,
    energy,
    evolve,
    ground_energy,
    make_preset,
    parse_hamiltonian,
    preset_names,
    rotation_matrix,
    run_experiment,
    SlotIndexError,
    solve_1q_3p,
)

__all__ = [
    "Ansatz",
    "ArgumentError",
    "ContractViolation",
    "Error",
    "GateParam",
    "Hamiltonian",
    "__version__",
    "energy",
    "evolve",
    "ground_energy",
    "make_preset",
    "parse_hamiltonian",
    "preset_names",
    "rotation_matrix",
    "run_experiment",
    "SlotIndexError",
    "solve_1q_3p",
]
