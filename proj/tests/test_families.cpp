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
#include <doctest.h>

#include <bit>
#include <cmath>

#include "monoscope/errors.hpp"
#include "monoscope/families.hpp"
#include "monoscope/hermitian_eig.hpp"
#include "test_helpers.hpp"

using namespace monoscope;
using namespace monoscope::testing;

namespace {

double amp_gap(const PureState &x, const PureState &y) {
    double gap = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        gap = std::max(gap, std::abs(x.amp(i) - y.amp(i)));
    }
    return gap;
}

} // namespace

TEST_CASE("dicke construction") {
    const auto w3 = dicke(3, 1);
    for (std::size_t i = 0; i < 8; ++i) {
        const double expect =
            std::popcount(i) == 1 ? 1.0 / std::sqrt(3.0) : 0.0;
        CHECK(std::abs(w3.amp(i) - Complex{expect, 0.0}) < 1e-15);
    }
    CHECK(amp_gap(dicke(4, 0), basis_state(4, 0)) == 0.0);
    int support = 0;
    const auto d42 = dicke(4, 2);
    for (std::size_t i = 0; i < 16; ++i) {
        if (std::abs(d42.amp(i)) > 0) {
            ++support;
            CHECK(std::abs(d42.amp(i) - Complex{1.0 / std::sqrt(6.0), 0.0}) <
                  1e-15);
        }
    }
    CHECK(support == 6);
    CHECK_THROWS_AS(dicke(4, 5), InvalidExcitation);
}

TEST_CASE("dicke_reduced equals the partial trace of the constructed state") {
    for (int n = 3; n <= 8; ++n) {
        for (int r = 0; r <= n; ++r) {
            const auto state = dicke(n, r);
            for (int k = 1; k <= std::min(4, n - 1); ++k) {
                std::vector<int> keep(k);
                for (int q = 0; q < k; ++q) {
                    keep[q] = q;
                }
                const auto direct = dicke_reduced(n, r, k);
                const auto traced = partial_trace(state, keep);
                CHECK(direct.matrix().max_abs_diff(traced.matrix()) < 1e-12);
            }
        }
    }
    // Spec anchors.
    const auto r311 = dicke_reduced(3, 1, 1);
    CHECK(r311.matrix()(0, 0).real() == doctest::Approx(2.0 / 3.0));
    const auto spec = hermitian_spectrum(dicke_reduced(4, 2, 2));
    CHECK(spec.eigenvalues.front() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    const auto pure = dicke_reduced(5, 0, 2);
    CHECK(pure.matrix()(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("ghz_w anchors") {
    const auto gen_ghz = ghz_w(4, 1.0 / std::sqrt(2.0), 0.0);
    CHECK(std::abs(gen_ghz.amp(0) - Complex{1.0 / std::sqrt(2.0), 0.0}) <
          1e-12);
    CHECK(std::abs(gen_ghz.amp(15) - Complex{1.0 / std::sqrt(2.0), 0.0}) <
          1e-12);

    CHECK(amp_gap(ghz_w(3, 0.0, 1.0), dicke(3, 1)) < 1e-12);

    const auto mixed = ghz_w(4, 0.6, 0.5);
    const double beta = std::sqrt(1.0 - 0.36 - 0.25);
    CHECK(std::abs(mixed.amp(15) - Complex{beta, 0.0}) < 1e-12);

    CHECK_THROWS_AS(ghz_w(3, 1.0, 0.5), InvalidAmplitudes);
}

TEST_CASE("ghz_w k-qubit marginal matches the three-level closed form") {
    Rng rng(RngStream{31, 4});
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 4 + trial % 3;
        Complex alpha = rng.complex_normal(), gamma = rng.complex_normal();
        const double scale =
            rng.uniform01() / std::sqrt(std::norm(alpha) + std::norm(gamma));
        alpha *= scale;
        gamma *= scale;
        const double b2 = 1.0 - std::norm(alpha) - std::norm(gamma);
        const auto state = ghz_w(n, alpha, gamma);
        for (int k = 2; k <= n / 2; ++k) {
            std::vector<int> keep(k);
            for (int q = 0; q < k; ++q) {
                keep[q] = q;
            }
            const auto rho = partial_trace(state, keep);
            // Basis {|0^k>, |W_k>, |1^k>}: compare matrix elements.
            std::vector<Complex> zero(rho.dim(), Complex{0.0, 0.0});
            auto w = zero;
            for (int q = 0; q < k; ++q) {
                w[std::size_t{1} << (k - 1 - q)] =
                    1.0 / std::sqrt(static_cast<double>(k));
            }
            zero[0] = 1.0;
            auto one = std::vector<Complex>(rho.dim(), Complex{0.0, 0.0});
            one[rho.dim() - 1] = 1.0;
            auto elem = [&](const std::vector<Complex> &u,
                            const std::vector<Complex> &v) {
                Complex sum{0.0, 0.0};
                for (std::size_t i = 0; i < rho.dim(); ++i) {
                    for (std::size_t j = 0; j < rho.dim(); ++j) {
                        sum += std::conj(u[i]) * rho.matrix()(i, j) * v[j];
                    }
                }
                return sum;
            };
            const double frac = static_cast<double>(k) / n;
            CHECK(std::abs(elem(zero, zero) -
                           Complex{std::norm(alpha) +
                                       std::norm(gamma) * (1.0 - frac),
                                   0.0}) < 1e-12);
            CHECK(std::abs(elem(w, w) - Complex{std::norm(gamma) * frac, 0.0}) <
                  1e-12);
            CHECK(std::abs(elem(one, one) - Complex{b2, 0.0}) < 1e-12);
            CHECK(std::abs(elem(zero, w) -
                           alpha * std::conj(gamma) * std::sqrt(frac)) < 1e-12);
            CHECK(std::abs(elem(zero, one)) < 1e-12);
            CHECK(std::abs(elem(w, one)) < 1e-12);
        }
    }
}

TEST_CASE("mg ground state marginals are Werner states") {
    for (int n : {4, 6, 8, 10}) {
        const auto state = mg_ground(n);
        const double p = mg_werner_p(n);
        const auto nn = partial_trace(state, {0, 1});
        CHECK(nn.matrix().max_abs_diff(werner(p).matrix()) < 1e-10);
        const auto spec = hermitian_spectrum(nn);
        CHECK(spec.eigenvalues.front() ==
              doctest::Approx((1.0 + 3.0 * p) / 4.0).epsilon(1e-10));
        // Translation invariance: interior bond gives the same marginal.
        const auto interior = partial_trace(state, {1, 2});
        CHECK(interior.matrix().max_abs_diff(werner(p).matrix()) < 1e-10);
    }
    CHECK(mg_werner_p(4) == doctest::Approx(2.0 / 3.0));
    CHECK(mg_werner_p(6) == doctest::Approx(0.6));
    CHECK_THROWS_AS(mg_ground(5), OddChainLength);
}

TEST_CASE("ising gas reduces to Dicke states") {
    CHECK(amp_gap(ising_gas_ground(4, 0.0), dicke(4, 2)) == 0.0);
    CHECK(amp_gap(ising_gas_ground(4, 0.5), dicke(4, 1)) == 0.0);
    CHECK(amp_gap(ising_gas_ground(4, 1.0), basis_state(4, 0)) == 0.0);
    CHECK_THROWS_AS(ising_gas_ground(4, 0.3), NonIntegerOccupation);
}

TEST_CASE("ising ring marginal matches the closed matrix") {
    for (int n = 4; n <= 8; ++n) {
        const auto state = ising_ring_ground(n);
        const auto pair = partial_trace(state, {0, 1});
        CHECK(pair.matrix().max_abs_diff(ising_ring_pair_marginal(n)) < 1e-9);
        const auto spec = hermitian_spectrum(pair);
        CHECK(spec.eigenvalues.front() ==
              doctest::Approx(ising_ring_pair_max_eigenvalue(n))
                  .epsilon(1e-9));
    }
    CHECK_THROWS_AS(ising_ring_ground(3), ChainTooShort);
}

TEST_CASE("slocc normal forms") {
    const auto g9 = slocc_class(9, {});
    CHECK(amp_gap(g9, ghz(4)) < 1e-15);

    const auto g7 = slocc_class(7, {});
    int nonzero = 0;
    for (std::size_t i = 0; i < 16; ++i) {
        if (std::abs(g7.amp(i)) > 0) {
            ++nonzero;
            CHECK(std::abs(g7.amp(i) - Complex{0.5, 0.0}) < 1e-15);
        }
    }
    CHECK(nonzero == 4);

    // Class 1 with a=d, b=c collapses onto two ket pairs.
    const auto g1 = slocc_class(
        1, {Complex{0.7, 0.1}, Complex{0.4, -0.2}, Complex{0.4, -0.2},
            Complex{0.7, 0.1}});
    for (const std::size_t idx : {0b0011, 0b1100, 0b0110, 0b1001}) {
        CHECK(std::abs(g1.amp(idx)) < 1e-15);
    }
    for (const std::size_t idx : {0b0000, 0b1111, 0b0101, 0b1010}) {
        CHECK(std::abs(g1.amp(idx)) > 0.1);
    }

    // Class 6 support pattern.
    const auto g6 = slocc_class(6, {Complex{0.5, 0.3}});
    for (const std::size_t idx : {0b0000, 0b1111, 0b0011, 0b0101, 0b0110}) {
        CHECK(std::abs(g6.amp(idx)) > 0.0);
    }
    CHECK(std::abs(g6.amp(0b1001)) == 0.0);

    CHECK_THROWS_AS(slocc_class(3, {Complex{1.0, 0.0}}), WrongParamCount);
    CHECK_THROWS_AS(slocc_class(6, {Complex{-0.5, 0.0}}), NegativeRealPart);
    CHECK_THROWS_AS(slocc_class(10, {}), WrongParamCount);

    // Random draws stay in the class support.
    Rng rng(RngStream{55, 0});
    const auto g6r = slocc_random(6, rng);
    for (const std::size_t idx : {0b0001, 0b0010, 0b1000, 0b1001}) {
        CHECK(std::abs(g6r.amp(idx)) == 0.0);
    }
}

TEST_CASE("haar sampling is deterministic per stream and well ranged") {
    Rng a(RngStream{123, 5});
    Rng b(RngStream{123, 5});
    const auto s1 = haar_random(4, a);
    const auto s2 = haar_random(4, b);
    for (std::size_t i = 0; i < s1.dim(); ++i) {
        CHECK(s1.amp(i) == s2.amp(i)); // bit identical
    }
    Rng c(RngStream{123, 6});
    const auto s3 = haar_random(4, c);
    CHECK(amp_gap(s1, s3) > 1e-3);

    double mean_max = 0.0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        Rng rng(RngStream{9000, static_cast<std::uint64_t>(t)});
        const auto state = haar_random(3, rng);
        const auto spec = hermitian_spectrum(partial_trace(state, {0}));
        mean_max += spec.eigenvalues.front();
    }
    mean_max /= trials;
    CHECK(mean_max > 0.5);
    CHECK(mean_max < 1.0);
}

TEST_CASE("symmetric_random is permutation invariant") {
    Rng rng(RngStream{321, 2});
    const auto state = symmetric_random(4, rng);
    const auto swapped = permute_qubits(state, {2, 0, 3, 1});
    CHECK(amp_gap(state, swapped) < 1e-12);
}

TEST_CASE("family specs parse and round trip") {
    const auto spec = FamilySpec::parse("dicke:n=5,r=2");
    CHECK(spec.family == Family::Dicke);
    CHECK(spec.n == 5);
    CHECK(spec.r == 2);
    CHECK(spec.to_string() == "dicke:n=5,r=2");
    CHECK_FALSE(spec.is_random());

    const auto slocc = FamilySpec::parse("slocc:class=3");
    CHECK(slocc.n_qubits() == 4);
    CHECK(slocc.is_random());
    const auto s1 = slocc.make(RngStream{1, 0});
    const auto s2 = slocc.make(RngStream{1, 0});
    CHECK(amp_gap(s1, s2) == 0.0);

    const auto ghzw = FamilySpec::parse("ghzw:n=4,alpha=0.6,gamma=0.3+0.2i");
    CHECK(ghzw.alpha == Complex{0.6, 0.0});
    CHECK(ghzw.gamma == Complex{0.3, 0.2});
    const auto round = FamilySpec::parse(ghzw.to_string());
    CHECK(round.gamma == ghzw.gamma);

    CHECK_THROWS_AS(FamilySpec::parse("nosuch:n=3"), InvalidAmplitudes);
}
