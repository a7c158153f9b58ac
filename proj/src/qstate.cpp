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
#include "monoscope/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "monoscope/errors.hpp"
#include "monoscope/hermitian_eig.hpp"

namespace monoscope {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kEigClipTol = 1e-10;

double norm_sq(const std::vector<Complex> &v) {
    double s = 0.0;
    for (const auto &z : v) {
        s += std::norm(z);
    }
    return s;
}

// Validates a keep/on set against n qubits; returns it sorted.
std::vector<int> checked_subset(std::vector<int> subset, int n,
                                const char *what) {
    if (subset.empty()) {
        throw EmptyKeepSet(std::string(what) + " set is empty");
    }
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
        throw IndexOutOfRange(std::string(what) + " set has duplicates");
    }
    if (subset.front() < 0 || subset.back() >= n) {
        throw IndexOutOfRange(std::string(what) + " references qubit out of range");
    }
    return subset;
}

// Bit-scatter tables: value v in [0, 2^k) spread over `positions`
// (big-endian positions within an n-qubit index).
std::vector<std::size_t> scatter_table(const std::vector<int> &positions,
                                       int n) {
    const std::size_t count = std::size_t{1} << positions.size();
    std::vector<std::size_t> table(count);
    for (std::size_t v = 0; v < count; ++v) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            const std::size_t bit = (v >> (positions.size() - 1 - i)) & 1u;
            idx |= bit << (n - 1 - positions[i]);
        }
        table[v] = idx;
    }
    return table;
}

} // namespace

PureState::PureState(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits_ < 1) {
        throw InvalidAmplitudes("state needs at least one qubit");
    }
    if (amplitudes_.size() != (std::size_t{1} << n_qubits_)) {
        throw InvalidAmplitudes("amplitude count does not match 2^n");
    }
    if (std::abs(norm_sq(amplitudes_) - 1.0) > kNormTol) {
        throw InvalidAmplitudes("state is not normalized");
    }
}

PureState PureState::normalized(int n_qubits, std::vector<Complex> amplitudes) {
    const double n2 = norm_sq(amplitudes);
    if (n2 <= 0.0) {
        throw InvalidAmplitudes("cannot normalize the zero vector");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto &z : amplitudes) {
        z *= inv;
    }
    return PureState(n_qubits, std::move(amplitudes));
}

DensityOperator::DensityOperator(std::vector<int> qubit_labels,
                                 ComplexMatrix matrix)
    : qubit_labels_(std::move(qubit_labels)), matrix_(std::move(matrix)) {
    if (qubit_labels_.empty() ||
        matrix_.dim() != (std::size_t{1} << qubit_labels_.size())) {
        throw InvalidAmplitudes("density operator dimension mismatch");
    }
    if (matrix_.hermiticity_defect() > kNormTol) {
        throw NotHermitian("density operator is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Complex{1.0, 0.0}) > kNormTol) {
        throw InvalidAmplitudes("density operator trace differs from 1");
    }
}

Bipartition Bipartition::of(int n_qubits, std::vector<int> side) {
    side = checked_subset(std::move(side), n_qubits, "bipartition");
    if (static_cast<int>(side.size()) >= n_qubits) {
        throw InvalidBipartition("bipartition side must be a strict subset");
    }
    std::vector<int> other;
    other.reserve(n_qubits - side.size());
    std::size_t j = 0;
    for (int q = 0; q < n_qubits; ++q) {
        if (j < side.size() && side[j] == q) {
            ++j;
        } else {
            other.push_back(q);
        }
    }
    Bipartition cut;
    const bool side_is_a =
        side.size() < other.size() ||
        (side.size() == other.size() && side.front() < other.front());
    if (side_is_a) {
        cut.part_a = std::move(side);
        cut.part_b = std::move(other);
    } else {
        cut.part_a = std::move(other);
        cut.part_b = std::move(side);
    }
    return cut;
}

DensityOperator partial_trace(const PureState &state,
                              const std::vector<int> &keep) {
    const int n = state.n_qubits();
    const auto kept = checked_subset(keep, n, "keep");
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }
    const auto keep_tab = scatter_table(kept, n);
    const auto trace_tab = scatter_table(traced, n);
    const std::size_t dk = keep_tab.size();

    ComplexMatrix rho(dk);
    for (std::size_t r = 0; r < dk; ++r) {
        for (std::size_t c = r; c < dk; ++c) {
            Complex sum{0.0, 0.0};
            for (const std::size_t t : trace_tab) {
                sum += state.amp(keep_tab[r] | t) *
                       std::conj(state.amp(keep_tab[c] | t));
            }
            rho(r, c) = sum;
            if (c != r) {
                rho(c, r) = std::conj(sum);
            }
        }
    }
    return DensityOperator(kept, std::move(rho));
}

DensityOperator partial_trace(const DensityOperator &op,
                              const std::vector<int> &keep) {
    const auto &labels = op.qubit_labels();
    const int n = op.n_qubits();

    // Map kept labels to positions within the operator.
    if (keep.empty()) {
        throw EmptyKeepSet("keep set is empty");
    }
    std::vector<int> kept_pos;
    std::vector<int> kept_labels;
    {
        std::set<int> seen;
        for (const int label : keep) {
            const auto it = std::find(labels.begin(), labels.end(), label);
            if (it == labels.end()) {
                throw IndexOutOfRange("keep references a qubit not in operator");
            }
            if (!seen.insert(label).second) {
                throw IndexOutOfRange("keep set has duplicates");
            }
        }
        for (int pos = 0; pos < n; ++pos) {
            if (seen.count(labels[pos]) != 0) {
                kept_pos.push_back(pos);
                kept_labels.push_back(labels[pos]);
            }
        }
    }
    std::vector<int> traced_pos;
    for (int pos = 0; pos < n; ++pos) {
        if (!std::binary_search(kept_pos.begin(), kept_pos.end(), pos)) {
            traced_pos.push_back(pos);
        }
    }
    const auto keep_tab = scatter_table(kept_pos, n);
    const auto trace_tab = scatter_table(traced_pos, n);
    const std::size_t dk = keep_tab.size();

    ComplexMatrix rho(dk);
    const ComplexMatrix &m = op.matrix();
    for (std::size_t r = 0; r < dk; ++r) {
        for (std::size_t c = 0; c < dk; ++c) {
            Complex sum{0.0, 0.0};
            for (const std::size_t t : trace_tab) {
                sum += m(keep_tab[r] | t, keep_tab[c] | t);
            }
            rho(r, c) = sum;
        }
    }
    return DensityOperator(std::move(kept_labels), std::move(rho));
}

Spectrum hermitian_spectrum(const DensityOperator &op) {
    Spectrum spec{hermitian_eigenvalues(op.matrix())};
    if (!spec.eigenvalues.empty() && spec.eigenvalues.back() < -kEigClipTol) {
        throw NotPositiveSemidefinite("density operator has a negative eigenvalue");
    }
    return spec;
}

ComplexMatrix partial_transpose(const DensityOperator &op,
                                const std::vector<int> &on) {
    const auto &labels = op.qubit_labels();
    const int n = op.n_qubits();
    std::size_t mask = 0;
    {
        std::set<int> seen;
        if (on.empty()) {
            throw EmptyKeepSet("transpose set is empty");
        }
        for (const int label : on) {
            const auto it = std::find(labels.begin(), labels.end(), label);
            if (it == labels.end()) {
                throw IndexOutOfRange("transpose references a qubit not in operator");
            }
            if (!seen.insert(label).second) {
                throw IndexOutOfRange("transpose set has duplicates");
            }
            const int pos = static_cast<int>(it - labels.begin());
            mask |= std::size_t{1} << (n - 1 - pos);
        }
    }
    const std::size_t d = op.dim();
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t ti = (i & ~mask) | (j & mask);
            const std::size_t tj = (j & ~mask) | (i & mask);
            out(ti, tj) = op.matrix()(i, j);
        }
    }
    return out;
}

double schmidt_max_eigenvalue(const PureState &state, const Bipartition &cut) {
    if (cut.part_a.size() + cut.part_b.size() !=
        static_cast<std::size_t>(state.n_qubits())) {
        throw InvalidBipartition("bipartition does not match state size");
    }
    const auto marginal = partial_trace(state, cut.part_a);
    const auto spec = hermitian_spectrum(marginal);
    return std::clamp(spec.eigenvalues.front(), 0.0, 1.0);
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) {
        return 0.0;
    }
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double von_neumann_entropy(const Spectrum &spec) {
    double s = 0.0;
    for (const double lam : spec.eigenvalues) {
        if (lam < -kEigClipTol) {
            throw NotPositiveSemidefinite("spectrum has a negative eigenvalue");
        }
        if (lam > 0.0) {
            s -= lam * std::log2(lam);
        }
    }
    return std::max(0.0, s);
}

std::vector<Bipartition> enumerate_bipartitions(int n, int cap) {
    if (n < 2) {
        throw InvalidBipartition("need at least two qubits to bipartition");
    }
    if (n > cap) {
        throw TooManyQubits("qubit count exceeds the configured cap");
    }
    std::vector<Bipartition> cuts;
    cuts.reserve((std::size_t{1} << (n - 1)) - 1);
    for (int k = 1; k <= n / 2; ++k) {
        // All k-subsets in lexicographic order; for the even split keep
        // only subsets containing qubit 0 so each cut appears once.
        std::vector<int> subset(k);
        for (int i = 0; i < k; ++i) {
            subset[i] = i;
        }
        while (true) {
            if (2 * k < n || subset[0] == 0) {
                cuts.push_back(Bipartition::of(n, subset));
            }
            int i = k - 1;
            while (i >= 0 && subset[i] == n - k + i) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++subset[i];
            for (int j = i + 1; j < k; ++j) {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }
    return cuts;
}

} // namespace monoscope
