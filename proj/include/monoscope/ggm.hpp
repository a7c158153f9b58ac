// Copyright 2026 The Monoscope Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <optional>

#include "monoscope/qstate.hpp"

namespace monoscope {

/// Generalized geometric measure with the quantities behind it: the best
/// single-qubit marginal eigenvalue a, the best eigenvalue b over cuts with
/// two or more qubits on the small side (absent below four qubits), their
/// gap beta = b - a, and the cut achieving the overall maximum.
struct GgmReport {
    double ggm = 0.0;
    double a = 0.0;
    std::optional<double> b;
    std::optional<double> beta;
    Bipartition max_cut;
    bool single_qubit_dominates = true;
};

GgmReport ggm(const PureState &state, int cap = kDefaultQubitCap);

/// Closed-form maximum marginal eigenvalues of a Dicke state: a from the
/// 1:rest cut, and for the half-filled case also b from the 2:rest cut.
struct DickeGgmValues {
    double a = 0.0;
    std::optional<double> b;
};
DickeGgmValues ggm_dicke_closed_form(int n, int r);

/// GGM of alpha|0..0> + beta|1..1> + gamma|W_n> in closed form (the 1:rest
/// cut always dominates for this family).
double ggm_ghzw_closed_form(Complex alpha, Complex gamma, int n);

} // namespace monoscope
