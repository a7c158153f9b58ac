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

#include <vector>

#include "monoscope/measures.hpp"
#include "monoscope/qstate.hpp"

namespace monoscope {

/// Which party is measured when the pairwise discord or work-deficit
/// enters a monogamy score. The node convention is the default.
enum class PairConvention { NodeMeasured, PartnerMeasured };

struct NodeScore {
    int node = 0;
    double cut_value = 0.0;          // Q(rho_{node:rest})
    std::vector<int> partners;       // ascending, excludes node
    std::vector<double> pair_values; // Q(rho_{node,partner})
    double delta = 0.0;              // cut_value - sum(pair_values)
};

struct MonogamyReport {
    MeasureKind kind = MeasureKind::ConcurrenceSq;
    std::vector<NodeScore> per_node;
    int min_node = 0;
    double delta = 0.0; // min over nodes, ties to the smallest index
};

double monogamy_score_node(const PureState &state, int node, MeasureKind kind,
                           const OptimizerConfig &cfg = {},
                           PairConvention conv = PairConvention::NodeMeasured);

MonogamyReport monogamy_score(const PureState &state, MeasureKind kind,
                              const OptimizerConfig &cfg = {},
                              PairConvention conv = PairConvention::NodeMeasured);

/// Reports for several kinds at once; the optimized pair measures share
/// one measurement scan per ordered pair.
std::vector<MonogamyReport>
monogamy_scores(const PureState &state, const std::vector<MeasureKind> &kinds,
                const OptimizerConfig &cfg = {},
                PairConvention conv = PairConvention::NodeMeasured);

} // namespace monoscope
