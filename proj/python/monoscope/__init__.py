# Copyright 2026 The Monoscope Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Monogamy scores, GGM, and multiparty entanglement bounds for few-qubit
pure states."""

from ._core import (
    Bipartition,
    BoundVerdict,
    DensityOperator,
    GgmReport,
    MeasureKind,
    MonogamyReport,
    MonoscopeError,
    NodeScore,
    OptimizerConfig,
    ProofRoute,
    PureState,
    binary_entropy,
    concurrence,
    dicke,
    discord,
    eof,
    f_q,
    ggm,
    ggm_dicke_closed_form,
    ggm_ghzw_closed_form,
    ghz_w,
    haar_random,
    ising_gas_ground,
    ising_ring_ground,
    mg_ground,
    monogamy_score,
    negativity,
    partial_trace,
    partial_trace_op,
    partial_transpose,
    pure_cut_measure,
    r_q,
    read_state_file,
    slocc_class,
    slocc_random,
    spectrum,
    symmetric_random,
    verdict,
    von_neumann_entropy,
    work_deficit,
    write_state_file,
)

__all__ = [
    "Bipartition",
    "BoundVerdict",
    "DensityOperator",
    "GgmReport",
    "MeasureKind",
    "MonogamyReport",
    "MonoscopeError",
    "NodeScore",
    "OptimizerConfig",
    "ProofRoute",
    "PureState",
    "binary_entropy",
    "concurrence",
    "dicke",
    "discord",
    "eof",
    "f_q",
    "ggm",
    "ggm_dicke_closed_form",
    "ggm_ghzw_closed_form",
    "ghz_w",
    "haar_random",
    "ising_gas_ground",
    "ising_ring_ground",
    "mg_ground",
    "monogamy_score",
    "negativity",
    "partial_trace",
    "partial_trace_op",
    "partial_transpose",
    "pure_cut_measure",
    "r_q",
    "read_state_file",
    "slocc_class",
    "slocc_random",
    "spectrum",
    "symmetric_random",
    "verdict",
    "von_neumann_entropy",
    "work_deficit",
    "write_state_file",
]

__version__ = "0.1.0"
