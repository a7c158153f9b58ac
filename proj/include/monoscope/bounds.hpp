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
#include <string>
#include <vector>

#include "monoscope/ggm.hpp"
#include "monoscope/monogamy.hpp"

namespace monoscope {

enum class ProofRoute { Theorem1, Proposition1, Unproven };

std::string to_string(ProofRoute route);

/// Everything needed to judge delta <= F(G) for one state and measure:
/// the bound value, the correction and residual terms when a multi-qubit
/// cut dominates the entanglement, and the three violation flags.
struct BoundVerdict {
    MeasureKind kind = MeasureKind::ConcurrenceSq;
    GgmReport ggm_report;
    MonogamyReport monogamy;
    double delta = 0.0;
    double f_of_g = 0.0;
    std::optional<double> r_term; // R(b, beta), absent without beta > 0
    std::optional<double> h_term;
    bool cond_beta = false;       // beta > 0
    bool cond_r_negative = false; // R < 0
    bool cond_h_negative = false; // H below the violation tolerance
    bool bound_satisfied = false; // delta <= F(G) + 1e-9
    ProofRoute proof_route = ProofRoute::Theorem1;
};

/// Bound function of the GGM: 4g(1-g), g(1-g), or the binary entropy h(g)
/// depending on the measure, per the quadratic/entropic split.
double f_q(MeasureKind kind, double g);

/// Correction with F(b - beta) = F(b) - R(b, beta) exactly, for every kind.
double r_q(MeasureKind kind, double b, double beta);

/// Residual sum at the minimizing node: pair terms plus the correction for
/// that node's own eigenvalue gap, so delta + H = F(G) holds identically.
double h_q(const PureState &state, MeasureKind kind,
           const MonogamyReport &report, const GgmReport &ggm_report,
           const OptimizerConfig &cfg = {});

BoundVerdict verdict(const PureState &state, MeasureKind kind,
                     const OptimizerConfig &cfg = {},
                     PairConvention conv = PairConvention::NodeMeasured);

/// Verdicts for several measures from shared monogamy and GGM passes.
std::vector<BoundVerdict>
verdicts(const PureState &state, const std::vector<MeasureKind> &kinds,
         const OptimizerConfig &cfg = {},
         PairConvention conv = PairConvention::NodeMeasured);

/// One row of the condition census for a fixed family and measure.
struct CensusRow {
    std::string family;
    int n = 0;
    MeasureKind kind = MeasureKind::ConcurrenceSq;
    long n_states = 0;
    double pct_beta_pos = 0.0;
    double pct_r_neg = 0.0;
    double pct_h_neg = 0.0;
    long n_violations = 0; // delta > F(G) + 1e-6
    double max_delta_minus_f = 0.0;
};

CensusRow condition_census(const std::vector<PureState> &states,
                           MeasureKind kind, const OptimizerConfig &cfg = {});

/// Census tolerance separating numerical slack from real violations.
constexpr double kViolationTol = 1e-6;

} // namespace monoscope
