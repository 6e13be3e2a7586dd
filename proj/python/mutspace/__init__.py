# Copyright 2026 The Mutspace Authors
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

"""Difference-based mutation analysis: d-vectors, deviance lattices,
dynamic subsumption and mutation-based fault localization."""

from ._core import (
    BehaviorMatrix,
    CapacityError,
    Differentiator,
    KillMatrix,
    UnknownIdError,
    RoleError,
    SchemaError,
    ProgramSyntaxError,
    cli,
    coincidence_counterexample,
    d_vector,
    dmsg_dot,
    dmsg_edges,
    max_minimal_size,
    mbfl_report,
    minimal_mutant_set,
    mutate,
    pdl_dot,
    pdl_shape,
    run,
)

__all__ = [
    "BehaviorMatrix",
    "CapacityError",
    "Differentiator",
    "KillMatrix",
    "UnknownIdError",
    "RoleError",
    "SchemaError",
    "ProgramSyntaxError",
    "cli",
    "coincidence_counterexample",
    "d_vector",
    "dmsg_dot",
    "dmsg_edges",
    "max_minimal_size",
    "mbfl_report",
    "minimal_mutant_set",
    "mutate",
    "pdl_dot",
    "pdl_shape",
    "run",
]
