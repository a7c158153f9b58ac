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
#include <vector>

#include "monoscope/complex_matrix.hpp"

namespace monoscope {

struct EigenSystem {
    std::vector<double> values;                 // descending
    std::optional<ComplexMatrix> vectors;       // columns match values
};

/// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi
/// rotations. Off-diagonal convergence threshold 1e-13 (relative to the
/// matrix scale), at most 100 sweeps. Throws NotHermitian if the input
/// deviates from Hermitian symmetry by more than `hermitian_tol`.
EigenSystem hermitian_eigensystem(const ComplexMatrix &m,
                                  bool want_vectors = false,
                                  double hermitian_tol = 1e-12);

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m,
                                          double hermitian_tol = 1e-12);

} // namespace monoscope
