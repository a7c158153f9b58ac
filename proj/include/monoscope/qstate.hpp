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

#include <cstdint>
#include <vector>

#include "monoscope/complex_matrix.hpp"

namespace monoscope {

/// Largest supported register unless a caller raises the cap explicitly.
constexpr int kDefaultQubitCap = 12;

/// Normalized pure state of n qubits. Qubit 0 is the most significant bit
/// of the computational-basis index throughout the library.
class PureState {
  public:
    /// Validates length and unit norm (1e-12).
    PureState(int n_qubits, std::vector<Complex> amplitudes);

    /// Rescales the given amplitudes to unit norm first. Throws
    /// InvalidAmplitudes on an all-zero vector.
    static PureState normalized(int n_qubits, std::vector<Complex> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex> &amplitudes() const { return amplitudes_; }
    const Complex &amp(std::size_t basis_index) const {
        return amplitudes_[basis_index];
    }

    /// Value of `qubit` in basis state `index` (big-endian).
    int bit(std::size_t index, int qubit) const {
        return static_cast<int>((index >> (n_qubits_ - 1 - qubit)) & 1u);
    }

  private:
    int n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Reduced density operator on a subset of the original qubits.
/// Hermitian within 1e-12 and unit trace within 1e-12 by construction.
class DensityOperator {
  public:
    DensityOperator(std::vector<int> qubit_labels, ComplexMatrix matrix);

    int n_qubits() const { return static_cast<int>(qubit_labels_.size()); }
    std::size_t dim() const { return matrix_.dim(); }
    const std::vector<int> &qubit_labels() const { return qubit_labels_; }
    const ComplexMatrix &matrix() const { return matrix_; }

  private:
    std::vector<int> qubit_labels_;
    ComplexMatrix matrix_;
};

/// Unordered two-block split of {0..n-1}. Canonical form: |A| <= |B|,
/// and for even splits part A holds the smallest index.
struct Bipartition {
    std::vector<int> part_a;
    std::vector<int> part_b;

    /// Builds the canonical bipartition of n qubits whose one side is
    /// `side`. Throws InvalidBipartition on an empty or full side.
    static Bipartition of(int n_qubits, std::vector<int> side);
};

/// Eigenvalues of a density operator, sorted descending.
struct Spectrum {
    std::vector<double> eigenvalues;
};

DensityOperator partial_trace(const PureState &state,
                              const std::vector<int> &keep);
DensityOperator partial_trace(const DensityOperator &op,
                              const std::vector<int> &keep);

Spectrum hermitian_spectrum(const DensityOperator &op);

/// Transpose on the `on` subset of op's qubits. Involution; trace preserved.
ComplexMatrix partial_transpose(const DensityOperator &op,
                                const std::vector<int> &on);

/// Largest squared Schmidt coefficient across the cut, i.e. the maximum
/// eigenvalue of the marginal on the smaller side. Clipped to [0, 1].
double schmidt_max_eigenvalue(const PureState &state, const Bipartition &cut);

/// -sum lambda log2 lambda with 0 log 0 = 0; eigenvalues within -1e-10 of
/// zero are clipped, anything more negative raises NotPositiveSemidefinite.
double von_neumann_entropy(const Spectrum &spec);

/// Every unordered bipartition of n qubits exactly once, canonical form,
/// ordered by |A| then lexicographically. Count is 2^{n-1} - 1.
std::vector<Bipartition> enumerate_bipartitions(int n,
                                                int cap = kDefaultQubitCap);

/// h(x) = -x log2 x - (1-x) log2(1-x), 0 at the endpoints.
double binary_entropy(double x);

} // namespace monoscope
