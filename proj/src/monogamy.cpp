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
#include "monoscope/monogamy.hpp"

#include <algorithm>
#include <map>

#include "monoscope/errors.hpp"

namespace monoscope {

namespace {

void require_monogamy_size(const PureState &state) {
    if (state.n_qubits() < 3) {
        throw InvalidBipartition("monogamy scores need at least three qubits");
    }
    if (state.n_qubits() > kDefaultQubitCap) {
        throw TooManyQubits("qubit count exceeds the configured cap");
    }
}

bool needs_optimizer(MeasureKind kind) {
    return kind == MeasureKind::Discord || kind == MeasureKind::WorkDeficit;
}

// Pair values for all requested kinds over every ordered (node, partner)
// pair. Symmetric kinds are computed once per unordered pair; discord and
// work-deficit share a single scan per measured side.
struct PairTable {
    std::map<std::pair<int, int>, double> value[5];

    double get(MeasureKind kind, int node, int partner) const {
        return value[static_cast<int>(kind)].at({node, partner});
    }
};

PairTable build_pair_table(const PureState &state,
                           const std::vector<MeasureKind> &kinds,
                           const OptimizerConfig &cfg, PairConvention conv) {
    const int n = state.n_qubits();
    const bool want_c2 = std::count(kinds.begin(), kinds.end(),
                                    MeasureKind::ConcurrenceSq) > 0;
    const bool want_n2 = std::count(kinds.begin(), kinds.end(),
                                    MeasureKind::NegativitySq) > 0;
    const bool want_eof =
        std::count(kinds.begin(), kinds.end(), MeasureKind::EoF) > 0;
    const bool want_d =
        std::count(kinds.begin(), kinds.end(), MeasureKind::Discord) > 0;
    const bool want_wd =
        std::count(kinds.begin(), kinds.end(), MeasureKind::WorkDeficit) > 0;

    PairTable table;
    auto &c2 = table.value[static_cast<int>(MeasureKind::ConcurrenceSq)];
    auto &n2 = table.value[static_cast<int>(MeasureKind::NegativitySq)];
    auto &ef = table.value[static_cast<int>(MeasureKind::EoF)];
    auto &dd = table.value[static_cast<int>(MeasureKind::Discord)];
    auto &wd = table.value[static_cast<int>(MeasureKind::WorkDeficit)];

    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            const auto rho = partial_trace(state, {j, k});
            if (want_c2 || want_eof) {
                const double c = concurrence(rho);
                if (want_c2) {
                    c2[{j, k}] = c * c;
                    c2[{k, j}] = c * c;
                }
                if (want_eof) {
                    const double e = binary_entropy(
                        0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
                    ef[{j, k}] = e;
                    ef[{k, j}] = e;
                }
            }
            if (want_n2) {
                const double v = negativity(rho);
                n2[{j, k}] = v * v;
                n2[{k, j}] = v * v;
            }
            if (want_d || want_wd) {
                // rho labels are {j, k}; side A measures j.
                const std::pair<int, MeasuredSide> variants[2] = {
                    {j, MeasuredSide::A}, {k, MeasuredSide::B}};
                for (const auto &[node, side] : variants) {
                    const MeasuredSide measured =
                        conv == PairConvention::NodeMeasured
                            ? side
                            : (side == MeasuredSide::A ? MeasuredSide::B
                                                       : MeasuredSide::A);
                    const int partner = node == j ? k : j;
                    if (want_d && want_wd) {
                        const auto both =
                            discord_and_work_deficit(rho, measured, cfg);
                        dd[{node, partner}] = both.discord.value;
                        wd[{node, partner}] = both.work_deficit.value;
                    } else if (want_d) {
                        dd[{node, partner}] = discord(rho, measured, cfg);
                    } else {
                        wd[{node, partner}] = work_deficit(rho, measured, cfg);
                    }
                }
            }
        }
    }
    return table;
}

MonogamyReport assemble_report(const PureState &state, MeasureKind kind,
                               const PairTable &table) {
    const int n = state.n_qubits();
    MonogamyReport report;
    report.kind = kind;
    report.per_node.reserve(n);
    for (int j = 0; j < n; ++j) {
        NodeScore score;
        score.node = j;
        score.cut_value = pure_cut_measure(state, j, kind);
        double pair_sum = 0.0;
        for (int k = 0; k < n; ++k) {
            if (k == j) {
                continue;
            }
            const double q = table.get(kind, j, k);
            score.partners.push_back(k);
            score.pair_values.push_back(q);
            pair_sum += q;
        }
        score.delta = score.cut_value - pair_sum;
        report.per_node.push_back(std::move(score));
    }
    report.min_node = 0;
    report.delta = report.per_node.front().delta;
    for (const auto &score : report.per_node) {
        if (score.delta < report.delta) {
            report.delta = score.delta;
            report.min_node = score.node;
        }
    }
    return report;
}

} // namespace

std::vector<MonogamyReport>
monogamy_scores(const PureState &state, const std::vector<MeasureKind> &kinds,
                const OptimizerConfig &cfg, PairConvention conv) {
    require_monogamy_size(state);
    const auto table = build_pair_table(state, kinds, cfg, conv);
    std::vector<MonogamyReport> reports;
    reports.reserve(kinds.size());
    for (const MeasureKind kind : kinds) {
        reports.push_back(assemble_report(state, kind, table));
    }
    return reports;
}

MonogamyReport monogamy_score(const PureState &state, MeasureKind kind,
                              const OptimizerConfig &cfg, PairConvention conv) {
    return monogamy_scores(state, {kind}, cfg, conv).front();
}

double monogamy_score_node(const PureState &state, int node, MeasureKind kind,
                           const OptimizerConfig &cfg, PairConvention conv) {
    require_monogamy_size(state);
    if (node < 0 || node >= state.n_qubits()) {
        throw IndexOutOfRange("node index out of range");
    }
    if (!needs_optimizer(kind)) {
        double pair_sum = 0.0;
        for (int k = 0; k < state.n_qubits(); ++k) {
            if (k == node) {
                continue;
            }
            pair_sum += measure_pair(partial_trace(state, {node, k}), kind,
                                     MeasuredSide::A, cfg);
        }
        return pure_cut_measure(state, node, kind) - pair_sum;
    }
    const auto report = monogamy_score(state, kind, cfg, conv);
    return report.per_node[node].delta;
}

} // namespace monoscope
