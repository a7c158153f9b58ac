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
#include "monoscope/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "monoscope/errors.hpp"

namespace monoscope {

namespace {

constexpr double kBoundTol = 1e-9;

double quadratic_weight(MeasureKind kind) {
    switch (kind) {
    case MeasureKind::ConcurrenceSq:
        return 4.0;
    case MeasureKind::NegativitySq:
        return 1.0;
    default:
        return 0.0; // entropic rows
    }
}

bool is_quadratic(MeasureKind kind) {
    return kind == MeasureKind::ConcurrenceSq ||
           kind == MeasureKind::NegativitySq;
}

// Largest eigenvalue of one single-qubit marginal.
double node_max_eigenvalue(const PureState &state, int node) {
    const auto rho = partial_trace(state, {node});
    const auto &m = rho.matrix();
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    return 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 * det)));
}

} // namespace

std::string to_string(ProofRoute route) {
    switch (route) {
    case ProofRoute::Theorem1:
        return "theorem1";
    case ProofRoute::Proposition1:
        return "proposition1";
    case ProofRoute::Unproven:
        return "unproven";
    }
    throw OutOfRange("unknown proof route");
}

double f_q(MeasureKind kind, double g) {
    if (g < -1e-12 || g > 1.0 + 1e-12) {
        throw OutOfRange("GGM argument must lie in [0, 1]");
    }
    g = std::clamp(g, 0.0, 1.0);
    if (is_quadratic(kind)) {
        return quadratic_weight(kind) * g * (1.0 - g);
    }
    return binary_entropy(g);
}

double r_q(MeasureKind kind, double b, double beta) {
    if (!(beta > 0.0) || beta > b || b > 1.0 + 1e-12) {
        throw OutOfRange("need 0 < beta <= b <= 1");
    }
    if (is_quadratic(kind)) {
        return quadratic_weight(kind) * beta * (1.0 - 2.0 * b + beta);
    }
    return binary_entropy(b) - binary_entropy(b - beta);
}

double h_q(const PureState &state, MeasureKind kind,
           const MonogamyReport &report, const GgmReport &ggm_report,
           const OptimizerConfig & /*cfg*/) {
    if (!ggm_report.beta.has_value() || *ggm_report.beta <= 0.0) {
        throw BetaUnavailable("residual needs a dominating multi-qubit cut");
    }
    const double b = *ggm_report.b;
    const auto &node = report.per_node[report.min_node];
    double pair_sum = 0.0;
    for (const double q : node.pair_values) {
        pair_sum += q;
    }
    // The minimizing node's own gap to b; using it (rather than b - a with
    // the global a) makes delta + H = F(G) an identity.
    const double beta_node = b - node_max_eigenvalue(state, node.node);
    if (beta_node <= 0.0) {
        return pair_sum;
    }
    return pair_sum + r_q(kind, b, beta_node);
}

std::vector<BoundVerdict>
verdicts(const PureState &state, const std::vector<MeasureKind> &kinds,
         const OptimizerConfig &cfg, PairConvention conv) {
    if (state.n_qubits() < 3) {
        throw InvalidBipartition("bound verdicts need at least three qubits");
    }
    const GgmReport ggm_report = ggm(state);
    const auto reports = monogamy_scores(state, kinds, cfg, conv);

    std::vector<BoundVerdict> out;
    out.reserve(kinds.size());
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        const MeasureKind kind = kinds[i];
        BoundVerdict v;
        v.kind = kind;
        v.ggm_report = ggm_report;
        v.monogamy = reports[i];
        v.delta = reports[i].delta;
        v.f_of_g = f_q(kind, ggm_report.ggm);
        v.cond_beta = ggm_report.beta.has_value() && *ggm_report.beta > 0.0;
        if (v.cond_beta) {
            v.r_term = r_q(kind, *ggm_report.b, *ggm_report.beta);
            v.h_term = h_q(state, kind, reports[i], ggm_report, cfg);
            v.cond_r_negative = *v.r_term < 0.0;
            // Bound-saturating states sit at H = 0 up to rounding; only a
            // residual below the violation tolerance marks a potential
            // violator (delta + H = F(G) ties the two thresholds together).
            v.cond_h_negative = *v.h_term < -kViolationTol;
        }
        v.bound_satisfied = v.delta <= v.f_of_g + kBoundTol;
        if (!v.cond_beta) {
            v.proof_route = ProofRoute::Theorem1;
        } else if (!v.cond_r_negative || !v.cond_h_negative) {
            v.proof_route = ProofRoute::Proposition1;
        } else {
            v.proof_route = ProofRoute::Unproven;
        }
        out.push_back(std::move(v));
    }
    return out;
}

BoundVerdict verdict(const PureState &state, MeasureKind kind,
                     const OptimizerConfig &cfg, PairConvention conv) {
    return verdicts(state, {kind}, cfg, conv).front();
}

CensusRow condition_census(const std::vector<PureState> &states,
                           MeasureKind kind, const OptimizerConfig &cfg) {
    if (states.empty()) {
        throw OutOfRange("census needs at least one state");
    }
    CensusRow row;
    row.n = states.front().n_qubits();
    row.kind = kind;
    row.n_states = static_cast<long>(states.size());
    row.max_delta_minus_f = -1e300;
    long beta_pos = 0, r_neg = 0, h_neg = 0;
    for (const auto &state : states) {
        const auto v = verdict(state, kind, cfg);
        beta_pos += v.cond_beta ? 1 : 0;
        r_neg += (v.cond_beta && v.cond_r_negative) ? 1 : 0;
        h_neg += (v.cond_beta && v.cond_r_negative && v.cond_h_negative) ? 1 : 0;
        const double margin = v.delta - v.f_of_g;
        row.max_delta_minus_f = std::max(row.max_delta_minus_f, margin);
        if (margin > kViolationTol) {
            ++row.n_violations;
        }
    }
    const double denom = static_cast<double>(states.size());
    row.pct_beta_pos = 100.0 * beta_pos / denom;
    row.pct_r_neg = 100.0 * r_neg / denom;
    row.pct_h_neg = 100.0 * h_neg / denom;
    return row;
}

} // namespace monoscope
