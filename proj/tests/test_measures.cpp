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

#include <cmath>

#include "monoscope/errors.hpp"
#include "monoscope/families.hpp"
#include "monoscope/hermitian_eig.hpp"
#include "monoscope/measures.hpp"
#include "test_helpers.hpp"

using namespace monoscope;
using namespace monoscope::testing;

namespace {

DensityOperator bell_pair() { return partial_trace(ghz(2), {0, 1}); }

DensityOperator classically_correlated() {
    ComplexMatrix m(4);
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    return DensityOperator({0, 1}, std::move(m));
}

DensityOperator apply_local_to_pair(const DensityOperator &rho, int which,
                                    const ComplexMatrix &u) {
    ComplexMatrix big(4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const std::size_t iu = which == 0 ? i >> 1 : i & 1;
            const std::size_t ik = which == 0 ? i & 1 : i >> 1;
            const std::size_t ju = which == 0 ? j >> 1 : j & 1;
            const std::size_t jk = which == 0 ? j & 1 : j >> 1;
            big(i, j) = (ik == jk ? u(iu, ju) : Complex{0.0, 0.0});
        }
    }
    const auto rotated = big * rho.matrix() * big.adjoint();
    return DensityOperator(rho.qubit_labels(), rotated);
}

} // namespace

TEST_CASE("concurrence anchors") {
    CHECK(concurrence(bell_pair()) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(concurrence(partial_trace(basis_state(2, 0), {0, 1})) ==
          doctest::Approx(0.0));
    CHECK(concurrence(partial_trace(dicke(3, 1), {0, 1})) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(concurrence(classically_correlated()) == doctest::Approx(0.0));
    CHECK_THROWS_AS(concurrence(partial_trace(ghz(3), {0})), NotTwoQubit);
}

TEST_CASE("negativity anchors") {
    CHECK(negativity(bell_pair()) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(negativity(classically_correlated()) == doctest::Approx(0.0));
    CHECK(negativity(partial_trace(dicke(3, 1), {0, 1})) ==
          doctest::Approx(std::sqrt((3.0 - std::sqrt(5.0)) / 18.0))
              .epsilon(1e-10));
}

TEST_CASE("eof anchors") {
    CHECK(eof(bell_pair()) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(eof(classically_correlated()) == doctest::Approx(0.0));
    CHECK(eof(partial_trace(dicke(3, 1), {0, 1})) ==
          doctest::Approx(0.550047760).epsilon(1e-7));
}

TEST_CASE("discord anchors") {
    CHECK(discord(classically_correlated(), MeasuredSide::A) ==
          doctest::Approx(0.0).epsilon(1e-9));
    CHECK(discord(bell_pair(), MeasuredSide::A) ==
          doctest::Approx(1.0).epsilon(1e-8));
    // Dicke(4,2) pair marginal against the closed form.
    const auto pair = partial_trace(dicke(4, 2), {0, 1});
    const auto cf = dicke_pair_closed_forms(4, 2);
    CHECK(discord(pair, MeasuredSide::A) ==
          doctest::Approx(cf.discord).epsilon(1e-4));
    CHECK(cf.discord == doctest::Approx(0.398393254261).epsilon(1e-10));
}

TEST_CASE("work deficit anchors") {
    CHECK(work_deficit(classically_correlated(), MeasuredSide::A) ==
          doctest::Approx(0.0).epsilon(1e-9));
    CHECK(work_deficit(bell_pair(), MeasuredSide::A) ==
          doctest::Approx(1.0).epsilon(1e-8));
    // Maximally mixed marginals: the two objectives differ by a constant,
    // so work-deficit equals discord exactly, not just within optimizer
    // slack.
    const auto w = werner(0.6);
    const double d = discord(w, MeasuredSide::A);
    CHECK(work_deficit(w, MeasuredSide::A) == doctest::Approx(d).epsilon(1e-9));
    CHECK(d == doctest::Approx(0.365148445).epsilon(1e-4));
}

TEST_CASE("pure_cut_measure anchors") {
    CHECK(pure_cut_measure(ghz(3), 1, MeasureKind::ConcurrenceSq) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pure_cut_measure(dicke(3, 1), 0, MeasureKind::ConcurrenceSq) ==
          doctest::Approx(8.0 / 9.0).epsilon(1e-12));
    CHECK(pure_cut_measure(ghz(3), 2, MeasureKind::Discord) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pure_cut_measure(ghz(3), 0, MeasureKind::NegativitySq) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK_THROWS_AS(pure_cut_measure(ghz(3), 3, MeasureKind::Discord),
                    IndexOutOfRange);
}

TEST_CASE("dicke pair closed forms") {
    const auto w3 = dicke_pair_closed_forms(3, 1);
    CHECK(w3.concurrence_sq == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
    const auto zero = dicke_pair_closed_forms(3, 0);
    CHECK(zero.concurrence_sq == doctest::Approx(0.0));
    CHECK(zero.negativity_sq == doctest::Approx(0.0));
    CHECK(zero.discord == doctest::Approx(0.0));
    const auto half = dicke_pair_closed_forms(4, 2);
    CHECK(half.concurrence_sq == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK_THROWS_AS(dicke_pair_closed_forms(3, 4), InvalidExcitation);
}

TEST_CASE("closed-form oracle across Dicke family") {
    for (int n = 2; n <= 8; ++n) {
        for (int r = 0; r <= n; ++r) {
            const auto cf = dicke_pair_closed_forms(n, r);
            const auto pair = partial_trace(dicke(n, r), {0, 1});
            const double c = concurrence(pair);
            const double neg = negativity(pair);
            CHECK(c * c == doctest::Approx(cf.concurrence_sq).epsilon(1e-9));
            CHECK(neg * neg == doctest::Approx(cf.negativity_sq).epsilon(1e-9));
            if (n >= 3) {
                CHECK(discord(pair, MeasuredSide::A) ==
                      doctest::Approx(cf.discord).epsilon(1e-4));
            }
        }
    }
}

TEST_CASE("pure two-qubit states: discord equals marginal entropy") {
    Rng rng(RngStream{606, 0});
    for (int trial = 0; trial < 10; ++trial) {
        const auto state = haar_random(2, rng);
        const auto rho = partial_trace(state, {0, 1});
        const auto rho_b = partial_trace(state, {1});
        const double s_b = von_neumann_entropy(hermitian_spectrum(rho_b));
        CHECK(discord(rho, MeasuredSide::A) ==
              doctest::Approx(s_b).epsilon(1e-6));
        const auto rho_a = partial_trace(state, {0});
        const double c = concurrence(rho);
        const double det =
            (rho_a.matrix()(0, 0) * rho_a.matrix()(1, 1) -
             rho_a.matrix()(0, 1) * rho_a.matrix()(1, 0))
                .real();
        CHECK(c * c == doctest::Approx(4.0 * det).epsilon(1e-6));
    }
}

TEST_CASE("two-qubit PPT is equivalent to zero concurrence") {
    Rng rng(RngStream{607, 0});
    for (int trial = 0; trial < 40; ++trial) {
        const auto rho = random_two_qubit_mixed(rng);
        const double neg = negativity(rho);
        const double c = concurrence(rho);
        if (neg < 1e-12) {
            CHECK(c < 1e-8);
        }
        if (c < 1e-12) {
            CHECK(neg < 1e-8);
        }
    }
}

TEST_CASE("optimizer refinement only improves on the grid") {
    Rng rng(RngStream{608, 0});
    // A huge tolerance makes the simplex converge immediately, so the
    // result is the bare grid minimum.
    OptimizerConfig grid_only;
    grid_only.refine_tolerance = 1e9;
    for (int trial = 0; trial < 5; ++trial) {
        const auto rho = random_two_qubit_mixed(rng);
        const double d_grid = discord(rho, MeasuredSide::A, grid_only);
        const double d_refined = discord(rho, MeasuredSide::A);
        CHECK(d_refined <= d_grid + 1e-12);
    }
}

TEST_CASE("regression: 4x finer grid moves discord by less than 1e-4") {
    Rng rng(RngStream{609, 0});
    const OptimizerConfig base;
    const auto fine = base.refined(4);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto rho = random_two_qubit_mixed(rng);
        const double d1 = discord(rho, MeasuredSide::A, base);
        const double d2 = discord(rho, MeasuredSide::A, fine);
        worst = std::max(worst, std::abs(d1 - d2));
    }
    CHECK(worst < 1e-4);
}

TEST_CASE("local unitaries leave the measures invariant") {
    Rng rng(RngStream{610, 0});
    for (int trial = 0; trial < 6; ++trial) {
        const auto rho = random_two_qubit_mixed(rng);
        const auto u = random_unitary2(rng);
        const auto rotated = apply_local_to_pair(rho, trial % 2, u);
        CHECK(concurrence(rotated) ==
              doctest::Approx(concurrence(rho)).epsilon(1e-6));
        CHECK(negativity(rotated) ==
              doctest::Approx(negativity(rho)).epsilon(1e-6));
        CHECK(discord(rotated, MeasuredSide::A) ==
              doctest::Approx(discord(rho, MeasuredSide::A)).epsilon(1e-4));
        CHECK(work_deficit(rotated, MeasuredSide::A) ==
              doctest::Approx(work_deficit(rho, MeasuredSide::A))
                  .epsilon(1e-4));
    }
}

TEST_CASE("measured side matters for asymmetric states") {
    // discord(A) and discord(B) generally differ; both must be reproducible.
    Rng rng(RngStream{611, 0});
    const auto rho = random_two_qubit_mixed(rng);
    const double da1 = discord(rho, MeasuredSide::A);
    const double da2 = discord(rho, MeasuredSide::A);
    CHECK(da1 == da2);
    const auto shared = discord_and_work_deficit(rho, MeasuredSide::A);
    CHECK(shared.discord.value == doctest::Approx(da1).epsilon(1e-9));
    CHECK(shared.work_deficit.value ==
          doctest::Approx(work_deficit(rho, MeasuredSide::A)).epsilon(1e-9));
}

TEST_CASE("optimizer reports divergence past the iteration cap") {
    Rng rng(RngStream{612, 0});
    const auto rho = random_two_qubit_mixed(rng);
    OptimizerConfig strangled;
    strangled.refine_tolerance = 1e-15;
    strangled.max_refine_iters = 1;
    CHECK_THROWS_AS(discord(rho, MeasuredSide::A, strangled),
                    OptimizerDiverged);
}

TEST_CASE("optimizer config validation") {
    OptimizerConfig bad;
    bad.grid_theta = 4;
    CHECK_THROWS_AS(discord(bell_pair(), MeasuredSide::A, bad), OutOfRange);
    bad = OptimizerConfig{};
    bad.refine_tolerance = 0.0;
    CHECK_THROWS_AS(discord(bell_pair(), MeasuredSide::A, bad), OutOfRange);
}

TEST_CASE("measure kind parsing") {
    CHECK(parse_measure_kind("C2") == MeasureKind::ConcurrenceSq);
    CHECK(parse_measure_kind("workdeficit") == MeasureKind::WorkDeficit);
    CHECK(parse_measure_kind("EoF") == MeasureKind::EoF);
    CHECK(paradigm_of(MeasureKind::Discord) == Paradigm::InformationTheoretic);
    CHECK(paradigm_of(MeasureKind::NegativitySq) == Paradigm::Entanglement);
    CHECK_THROWS_AS(parse_measure_kind("tangle"), OutOfRange);
}
