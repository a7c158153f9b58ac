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
#include "monoscope/ggm.hpp"

#include <algorithm>
#include <cmath>

#include "monoscope/errors.hpp"

namespace monoscope {

namespace {

constexpr double kProductThreshold = 1.0 - 1e-9;

double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    double out = 1.0;
    for (int i = 1; i <= k; ++i) {
        out *= static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return std::round(out);
}

} // namespace

GgmReport ggm(const PureState &state, int cap) {
    const int n = state.n_qubits();
    GgmReport report;
    double overall = -1.0;
    for (const auto &cut : enumerate_bipartitions(n, cap)) {
        const double lam = schmidt_max_eigenvalue(state, cut);
        if (cut.part_a.size() == 1) {
            report.a = std::max(report.a, lam);
        } else {
            report.b = std::max(report.b.value_or(0.0), lam);
        }
        if (lam > overall) {
            overall = lam;
            report.max_cut = cut;
        }
    }
    if (report.b.has_value()) {
        report.beta = *report.b - report.a;
    }
    report.single_qubit_dominates = !report.beta.has_value() || *report.beta <= 0.0;
    report.ggm = overall > kProductThreshold ? 0.0 : 1.0 - overall;
    return report;
}

DickeGgmValues ggm_dicke_closed_form(int n, int r) {
    if (n < 2 || r < 0 || r > n) {
        throw InvalidExcitation("need n >= 2 and 0 <= r <= n");
    }
    DickeGgmValues out;
    if (2 * r > n) {
        out.a = binomial(n - 1, r - 1) / binomial(n, r); // r/n
    } else {
        out.a = binomial(n - 1, r) / binomial(n, r); // 1 - r/n
    }
    if (2 * r == n && n >= 4) {
        out.b = 2.0 * binomial(n - 2, r - 1) / binomial(n, r); // n / (2(n-1))
    }
    return out;
}

double ggm_ghzw_closed_form(Complex alpha, Complex gamma, int n) {
    if (n < 3) {
        throw InvalidAmplitudes("closed form needs at least three qubits");
    }
    const double a2 = std::norm(alpha);
    const double g2 = std::norm(gamma);
    if (a2 + g2 > 1.0 + 1e-12) {
        throw InvalidAmplitudes("|alpha|^2 + |gamma|^2 exceeds 1");
    }
    const double b2 = std::max(0.0, 1.0 - a2 - g2);
    // det of the single-qubit marginal; its top eigenvalue is the best
    // Schmidt eigenvalue of the family across all cuts.
    const double det =
        a2 * b2 + (static_cast<double>(n - 1) / n) * g2 * (b2 + g2 / n);
    const double top = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 * det)));
    if (top > kProductThreshold) {
        return 0.0;
    }
    return 1.0 - top;
}

} // namespace monoscope
