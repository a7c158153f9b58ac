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

#include "monoscope/bounds.hpp"
#include "monoscope/errors.hpp"
#include "monoscope/families.hpp"
#include "test_helpers.hpp"

using namespace monoscope;
using namespace monoscope::testing;

TEST_CASE("f_q anchors") {
    CHECK(f_q(MeasureKind::ConcurrenceSq, 0.5) == doctest::Approx(1.0));
    CHECK(f_q(MeasureKind::NegativitySq, 0.5) == doctest::Approx(0.25));
    CHECK(f_q(MeasureKind::Discord, 0.5) == doctest::Approx(1.0));
    CHECK(f_q(MeasureKind::WorkDeficit, 0.25) ==
          doctest::Approx(binary_entropy(0.25)));
    for (const auto kind : default_measure_kinds()) {
        CHECK(f_q(kind, 0.0) == doctest::Approx(0.0));
        CHECK(f_q(kind, 0.3) == doctest::Approx(f_q(kind, 0.7)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(f_q(MeasureKind::Discord, 1.5), OutOfRange);
}

TEST_CASE("r_q anchors") {
    CHECK(r_q(MeasureKind::ConcurrenceSq, 2.0 / 3.0, 1.0 / 6.0) ==
          doctest::Approx(-1.0 / 9.0).epsilon(1e-12));
    CHECK(r_q(MeasureKind::NegativitySq, 2.0 / 3.0, 1.0 / 6.0) ==
          doctest::Approx(-1.0 / 36.0).epsilon(1e-12));
    // beta -> 0 limit.
    for (const auto kind : default_measure_kinds()) {
        CHECK(std::abs(r_q(kind, 0.7, 1e-13)) < 1e-11);
    }
    // Dicke r=n/2 entropic value quoted in closed form: for n=4,
    // R = -(1/2)(log2(n(n-2)/(n-1)^2) + log2(n/(n-2))/(n-1)).
    const double n = 4.0;
    const double quoted = -0.5 * (std::log2(n * (n - 2.0) / ((n - 1.0) * (n - 1.0))) +
                                  std::log2(n / (n - 2.0)) / (n - 1.0));
    CHECK(r_q(MeasureKind::Discord, n / (2.0 * (n - 1.0)),
              n / (2.0 * (n - 1.0)) - 0.5) ==
          doctest::Approx(quoted).epsilon(1e-12));
    CHECK_THROWS_AS(r_q(MeasureKind::Discord, 0.5, 0.6), OutOfRange);
}

TEST_CASE("shift identity F(b - beta) = F(b) - R(b, beta)") {
    Rng rng(RngStream{900, 0});
    const std::vector<MeasureKind> kinds = {
        MeasureKind::ConcurrenceSq, MeasureKind::NegativitySq,
        MeasureKind::Discord, MeasureKind::WorkDeficit};
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const double b = 1e-9 + (1.0 - 2e-9) * rng.uniform01();
        const double beta = b * rng.uniform01();
        if (beta <= 0.0) {
            continue;
        }
        for (const auto kind : kinds) {
            const double lhs = f_q(kind, b - beta);
            const double rhs = f_q(kind, b) - r_q(kind, b, beta);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("h_q on the half-filled Dicke state") {
    const auto state = dicke(4, 2);
    const auto g = ggm(state);
    const auto report = monogamy_score(state, MeasureKind::ConcurrenceSq);
    const double h = h_q(state, MeasureKind::ConcurrenceSq, report, g);
    CHECK(h == doctest::Approx(2.0 / 9.0).epsilon(1e-9));
    CHECK(report.delta + h == doctest::Approx(f_q(MeasureKind::ConcurrenceSq,
                                                  g.ggm))
                                  .epsilon(1e-9));
}

TEST_CASE("h_q on the dimerized chain") {
    const auto state = mg_ground(6);
    const auto g = ggm(state);
    REQUIRE(g.beta.has_value());
    CHECK(*g.b == doctest::Approx(0.7).epsilon(1e-10)); // (1+3p)/4, p=3/5
    const auto report = monogamy_score(state, MeasureKind::ConcurrenceSq);
    const double h = h_q(state, MeasureKind::ConcurrenceSq, report, g);
    CHECK(h == doctest::Approx(0.16).epsilon(1e-9)); // (z/16)(1-3p)^2
}

TEST_CASE("h_q needs a dominating multi-qubit cut") {
    const auto state = ghz(4); // a = b = 1/2, beta = 0
    const auto g = ggm(state);
    const auto report = monogamy_score(state, MeasureKind::ConcurrenceSq);
    CHECK_THROWS_AS(h_q(state, MeasureKind::ConcurrenceSq, report, g),
                    BetaUnavailable);
}

TEST_CASE("verdict anchors") {
    SUBCASE("ghz3 saturates the squared-concurrence bound") {
        const auto v = verdict(ghz(3), MeasureKind::ConcurrenceSq);
        CHECK(v.delta == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(v.f_of_g == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(v.bound_satisfied);
        CHECK(v.proof_route == ProofRoute::Theorem1);
    }
    SUBCASE("three-qubit states always ride theorem 1") {
        Rng rng(RngStream{901, 0});
        for (int trial = 0; trial < 10; ++trial) {
            const auto v =
                verdict(haar_random(3, rng), MeasureKind::NegativitySq);
            CHECK(v.proof_route == ProofRoute::Theorem1);
            CHECK_FALSE(v.cond_beta);
            CHECK(v.bound_satisfied);
        }
    }
    SUBCASE("half-filled Dicke discord goes through proposition 1") {
        const auto v = verdict(dicke(4, 2), MeasureKind::Discord);
        CHECK(v.cond_beta);
        CHECK(v.cond_r_negative);
        CHECK_FALSE(v.cond_h_negative);
        CHECK(v.proof_route == ProofRoute::Proposition1);
        CHECK(v.bound_satisfied);
    }
    SUBCASE("w3 discord bound holds despite a negative score") {
        const auto v = verdict(dicke(3, 1), MeasureKind::Discord);
        CHECK(v.delta < 0.0);
        CHECK(v.bound_satisfied);
    }
}

TEST_CASE("identity delta + H = F(G) whenever beta > 0") {
    Rng rng(RngStream{902, 0});
    int covered = 0;
    for (int trial = 0; trial < 400 && covered < 12; ++trial) {
        const auto state = haar_random(4, rng);
        const auto g = ggm(state);
        if (!g.beta.has_value() || *g.beta <= 0.0) {
            continue;
        }
        ++covered;
        for (const auto kind :
             {MeasureKind::ConcurrenceSq, MeasureKind::NegativitySq}) {
            const auto report = monogamy_score(state, kind);
            const double h = h_q(state, kind, report, g);
            CHECK(report.delta + h ==
                  doctest::Approx(f_q(kind, g.ggm)).epsilon(1e-8));
        }
    }
    CHECK(covered > 0);
}

TEST_CASE("census on a degenerate family") {
    std::vector<PureState> states;
    for (int i = 0; i < 5; ++i) {
        states.push_back(ghz(4));
    }
    const auto row = condition_census(states, MeasureKind::ConcurrenceSq);
    CHECK(row.pct_beta_pos == doctest::Approx(0.0));
    CHECK(row.pct_r_neg == doctest::Approx(0.0));
    CHECK(row.pct_h_neg == doctest::Approx(0.0));
    CHECK(row.n_violations == 0);
    CHECK(row.n_states == 5);
}

TEST_CASE("verdict route consistency on random states") {
    Rng rng(RngStream{903, 0});
    for (int trial = 0; trial < 20; ++trial) {
        const auto state = haar_random(4, rng);
        for (const auto kind :
             {MeasureKind::ConcurrenceSq, MeasureKind::NegativitySq}) {
            const auto v = verdict(state, kind);
            if (v.proof_route != ProofRoute::Unproven) {
                CHECK(v.bound_satisfied);
            }
            if (v.cond_beta) {
                // R < 0 is automatic once beta > 0 for these measures.
                CHECK(v.cond_r_negative);
            }
        }
    }
}
