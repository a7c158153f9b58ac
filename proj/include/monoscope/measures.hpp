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

#include <string>
#include <vector>

#include "monoscope/qstate.hpp"

namespace monoscope {

enum class MeasureKind {
    ConcurrenceSq,
    NegativitySq,
    Discord,
    WorkDeficit,
    EoF,
};

enum class Paradigm { Entanglement, InformationTheoretic };

Paradigm paradigm_of(MeasureKind kind);
std::string to_string(MeasureKind kind);
MeasureKind parse_measure_kind(const std::string &name);

/// All kinds, in the canonical reporting order (EoF excluded).
const std::vector<MeasureKind> &default_measure_kinds();

/// Rank-one projective measurement direction on the Bloch sphere.
struct MeasurementSetting {
    double theta = 0.0; // [0, pi]
    double phi = 0.0;   // [0, 2*pi)
};

struct OptimizerConfig {
    int grid_theta = 60;
    int grid_phi = 120;
    double refine_tolerance = 1e-6;
    int max_refine_iters = 500;

    OptimizerConfig refined(int factor) const {
        OptimizerConfig c = *this;
        c.grid_theta *= factor;
        c.grid_phi *= factor;
        return c;
    }
};

enum class MeasuredSide { A, B };

/// Wootters concurrence of a two-qubit state, in [0, 1].
double concurrence(const DensityOperator &rho);

/// Negativity (half the trace-norm excess of the partial transpose),
/// in [0, 1/2].
double negativity(const DensityOperator &rho);

/// Entanglement of formation through the concurrence closed form (bits).
double eof(const DensityOperator &rho);

struct OptimizedValue {
    double value = 0.0;
    MeasurementSetting setting;
};

/// Quantum discord with the projective measurement on `side` (bits).
OptimizedValue discord_opt(const DensityOperator &rho, MeasuredSide side,
                           const OptimizerConfig &cfg = {});
double discord(const DensityOperator &rho, MeasuredSide side,
               const OptimizerConfig &cfg = {});

/// One-way quantum work-deficit, dephasing on `side` (bits).
OptimizedValue work_deficit_opt(const DensityOperator &rho, MeasuredSide side,
                                const OptimizerConfig &cfg = {});
double work_deficit(const DensityOperator &rho, MeasuredSide side,
                    const OptimizerConfig &cfg = {});

/// Both optimized measures from one grid scan.
struct PairOptimized {
    OptimizedValue discord;
    OptimizedValue work_deficit;
};
PairOptimized discord_and_work_deficit(const DensityOperator &rho,
                                       MeasuredSide side,
                                       const OptimizerConfig &cfg = {});

/// Q(rho_{node:rest}) for a pure global state: z det(rho_node) for the
/// squared entanglement measures (z = 4 or 1), S(rho_node) otherwise.
double pure_cut_measure(const PureState &state, int node, MeasureKind kind);

/// Single dispatch for Q(rho) on a two-qubit state.
double measure_pair(const DensityOperator &rho, MeasureKind kind,
                    MeasuredSide side, const OptimizerConfig &cfg = {});

/// Closed forms for the pair marginal of a Dicke state.
struct DickePairValues {
    double concurrence_sq = 0.0;
    double negativity_sq = 0.0;
    double discord = 0.0;
};
DickePairValues dicke_pair_closed_forms(int n, int r);

} // namespace monoscope
