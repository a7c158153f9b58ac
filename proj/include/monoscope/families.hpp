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
#include "monoscope/rng.hpp"

namespace monoscope {

/// Equal superposition of all weight-r basis states.
PureState dicke(int n, int r);

/// k-qubit marginal of dicke(n, r) built directly from the hypergeometric
/// mixture of k-qubit Dicke projectors.
DensityOperator dicke_reduced(int n, int r, int k);

/// alpha |0..0> + beta |1..1> + gamma |W_n>, with beta >= 0 real fixed by
/// normalization. Requires |alpha|^2 + |gamma|^2 <= 1.
PureState ghz_w(int n, Complex alpha, Complex gamma);

/// Equal-weight sum of the two periodic dimer coverings of an even ring;
/// the nearest-neighbor marginal is a Werner state.
PureState mg_ground(int n);

/// Werner parameter of the mg_ground nearest-neighbor marginal.
double mg_werner_p(int n);

/// Equal superposition over configurations with n(1-x)/2 excited spins.
/// Reduces to dicke(n, n/2) at x = 0.
PureState ising_gas_ground(int n, double x);

/// Superposition of the boundary-anchored domain-wall configurations of a
/// ring with one antiferromagnetic bond; duplicate kets accumulate.
PureState ising_ring_ground(int n);

/// 4x4 matrix of the ising_ring_ground nearest-neighbor pair marginal in
/// closed form.
ComplexMatrix ising_ring_pair_marginal(int n);

/// Largest nearest-neighbor-pair marginal eigenvalue of the ring state,
/// (n + 2 + sqrt(n^2 + 16)) / 4n.
double ising_ring_pair_max_eigenvalue(int n);

/// Number of free complex parameters of four-qubit normal form `cls`.
int slocc_param_count(int cls);

/// Normal-form representative of four-qubit class 1..9. Parameters must
/// have non-negative real parts. With normalize=false the raw superposition
/// must already have unit norm.
PureState slocc_class(int cls, const std::vector<Complex> &params,
                      bool normalize = true);

/// Haar-uniform n-qubit pure state: iid complex Gaussian amplitudes,
/// normalized.
PureState haar_random(int n, Rng &rng);

/// Random element of the symmetric subspace: complex Gaussian coefficients
/// over the Dicke basis, normalized.
PureState symmetric_random(int n, Rng &rng);

/// Normal form of class 1..6 with random parameters: standard complex
/// normal components, real part folded to its absolute value.
PureState slocc_random(int cls, Rng &rng);

/// Families understood by manifests and the command line.
enum class Family {
    Dicke,
    GhzW,
    GenGhz,
    MG,
    IsingGas,
    IsingRing,
    Slocc,
    SymmetricRandom,
    HaarRandom,
};

/// One family plus its parameters; parses from and prints to the dotted
/// syntax, e.g. "dicke:n=5,r=2" or "slocc:class=3".
struct FamilySpec {
    Family family = Family::HaarRandom;
    int n = 0;              // qubit count (0 = implied, e.g. slocc -> 4)
    int r = 0;              // dicke excitation
    int slocc_cls = 0;      // slocc class 1..9
    double x = 0.0;         // ising gas magnetization offset
    Complex alpha{0.0, 0.0};
    Complex gamma{0.0, 0.0};
    std::vector<Complex> slocc_params; // fixed params; empty = random draw

    static FamilySpec parse(const std::string &text);
    std::string to_string() const;

    int n_qubits() const;
    bool is_random() const;

    /// Constructs the state for one sample index. Deterministic families
    /// ignore the stream.
    PureState make(RngStream stream) const;
};

} // namespace monoscope
