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
#include "monoscope/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "monoscope/errors.hpp"
#include "monoscope/hermitian_eig.hpp"

namespace monoscope {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string timestamp_utc() {
    char buf[64];
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct StateResult {
    std::vector<BoundVerdict> verdicts;
    double identity_residual = 0.0;
};

StateResult evaluate_state(const PureState &state,
                           const ExperimentManifest &manifest,
                           const OptimizerConfig &cfg) {
    StateResult res;
    res.verdicts = verdicts(state, manifest.measures, cfg,
                            manifest.pair_convention);
    for (auto &v : res.verdicts) {
        if (v.h_term.has_value()) {
            const double residual =
                std::abs(v.delta + *v.h_term - v.f_of_g);
            res.identity_residual = std::max(res.identity_residual, residual);
        }
        // A flagged violation gets one retry at finer resolution before it
        // counts; the optimized measures can only move toward the truth.
        if (v.delta > v.f_of_g + kViolationTol &&
            (v.kind == MeasureKind::Discord ||
             v.kind == MeasureKind::WorkDeficit)) {
            const auto fine =
                verdict(state, v.kind, cfg.refined(4), manifest.pair_convention);
            v = fine;
        }
    }
    return res;
}

} // namespace

int resolve_thread_count(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("MONOSCOPE_THREADS")) {
        const int from_env = std::atoi(env);
        if (from_env > 0) {
            return from_env;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

SampleSummary run_sample(const ExperimentManifest &manifest,
                         std::vector<ScatterRow> *rows_out) {
    if (manifest.n_states < 1) {
        throw OutOfRange("manifest needs n_states >= 1");
    }
    if (manifest.measures.empty()) {
        throw OutOfRange("manifest needs at least one measure");
    }

    const long n_states = manifest.n_states;
    const std::string family_name = manifest.family.to_string();
    std::vector<StateResult> results(n_states);

    const int n_threads =
        std::min<long>(resolve_thread_count(manifest.threads), n_states);
    std::atomic<long> next{0};
    std::atomic<bool> failed{false};
    std::string error_text;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (true) {
            const long i = next.fetch_add(1);
            if (i >= n_states || failed.load()) {
                break;
            }
            try {
                const PureState state = manifest.family.make(
                    RngStream{manifest.seed, static_cast<std::uint64_t>(i)});
                results[i] = evaluate_state(state, manifest, manifest.optimizer);
            } catch (const std::exception &e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                error_text = e.what();
                failed.store(true);
            }
        }
    };
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failed.load()) {
        throw Error("sampling failed: " + error_text);
    }

    // Deterministic aggregation in state-index order.
    SampleSummary summary;
    summary.n_states = n_states;
    std::vector<ScatterRow> rows;
    rows.reserve(n_states * manifest.measures.size());
    summary.census.resize(manifest.measures.size());
    for (std::size_t m = 0; m < manifest.measures.size(); ++m) {
        auto &row = summary.census[m];
        row.family = family_name;
        row.n = manifest.family.n_qubits();
        row.kind = manifest.measures[m];
        row.n_states = n_states;
        row.max_delta_minus_f = -1e300;
    }

    std::vector<long> beta_pos(manifest.measures.size(), 0);
    std::vector<long> r_neg(manifest.measures.size(), 0);
    std::vector<long> h_neg(manifest.measures.size(), 0);
    for (long i = 0; i < n_states; ++i) {
        const auto &res = results[i];
        summary.max_identity_residual =
            std::max(summary.max_identity_residual, res.identity_residual);
        for (std::size_t m = 0; m < res.verdicts.size(); ++m) {
            const auto &v = res.verdicts[m];
            ScatterRow row;
            row.state_index = i;
            row.family = family_name;
            row.kind = v.kind;
            row.delta = v.delta;
            row.ggm = v.ggm_report.ggm;
            row.f_of_g = v.f_of_g;
            row.bound_margin = v.f_of_g - v.delta;
            row.route = v.proof_route;
            rows.push_back(std::move(row));

            auto &census = summary.census[m];
            beta_pos[m] += v.cond_beta ? 1 : 0;
            r_neg[m] += (v.cond_beta && v.cond_r_negative) ? 1 : 0;
            h_neg[m] +=
                (v.cond_beta && v.cond_r_negative && v.cond_h_negative) ? 1 : 0;
            const double margin = v.delta - v.f_of_g;
            census.max_delta_minus_f =
                std::max(census.max_delta_minus_f, margin);
            if (margin > kViolationTol) {
                ++census.n_violations;
                ++summary.n_violations;
            }
            summary.max_delta_minus_f =
                std::max(summary.max_delta_minus_f, margin);
            summary.min_delta = std::min(summary.min_delta, v.delta);
        }
    }
    for (std::size_t m = 0; m < manifest.measures.size(); ++m) {
        auto &census = summary.census[m];
        census.pct_beta_pos = 100.0 * beta_pos[m] / n_states;
        census.pct_r_neg = 100.0 * r_neg[m] / n_states;
        census.pct_h_neg = 100.0 * h_neg[m] / n_states;
    }

    if (!manifest.output_path.empty()) {
        std::ofstream out(manifest.output_path);
        if (!out) {
            throw Error("cannot open output file: " + manifest.output_path);
        }
        if (manifest.format == ExperimentManifest::Format::Csv) {
            write_scatter_csv(out, manifest, rows);
        } else {
            write_scatter_json(out, manifest, rows, summary);
        }
    }
    if (rows_out != nullptr) {
        *rows_out = std::move(rows);
    }
    return summary;
}

std::vector<CensusRow>
run_census(const std::vector<ExperimentManifest> &manifests) {
    std::vector<CensusRow> rows;
    for (const auto &manifest : manifests) {
        ExperimentManifest quiet = manifest;
        quiet.output_path.clear();
        const auto summary = run_sample(quiet);
        rows.insert(rows.end(), summary.census.begin(), summary.census.end());
    }
    return rows;
}

void write_scatter_csv(std::ostream &out, const ExperimentManifest &manifest,
                       const std::vector<ScatterRow> &rows) {
    out << "# schema_version=" << kScatterSchemaVersion << "\n";
    out << "# family=" << manifest.family.to_string()
        << " n_states=" << manifest.n_states << " seed=" << manifest.seed
        << "\n";
    if (manifest.header_meta) {
        out << "# generated_at=" << timestamp_utc() << "\n";
    }
    out << "state_index,family,kind,delta,ggm,f_of_g,bound_margin,route\n";
    for (const auto &r : rows) {
        out << r.state_index << ',' << r.family << ',' << to_string(r.kind)
            << ',' << fmt(r.delta) << ',' << fmt(r.ggm) << ',' << fmt(r.f_of_g)
            << ',' << fmt(r.bound_margin) << ',' << to_string(r.route) << "\n";
    }
}

namespace {

std::string family_spec_json(const FamilySpec &spec, std::uint64_t seed) {
    std::ostringstream os;
    os.precision(17);
    const char *name = "";
    switch (spec.family) {
    case Family::Dicke:
        name = "dicke";
        break;
    case Family::GhzW:
        name = "ghzw";
        break;
    case Family::GenGhz:
        name = "genghz";
        break;
    case Family::MG:
        name = "mg";
        break;
    case Family::IsingGas:
        name = "ising_gas";
        break;
    case Family::IsingRing:
        name = "ising_ring";
        break;
    case Family::Slocc:
        name = "slocc";
        break;
    case Family::SymmetricRandom:
        name = "symmetric";
        break;
    case Family::HaarRandom:
        name = "haar";
        break;
    }
    os << "{\"family\": \"" << name << "\", \"params\": {";
    bool first = true;
    auto field = [&](const std::string &key, const std::string &value) {
        os << (first ? "" : ", ") << "\"" << key << "\": " << value;
        first = false;
    };
    auto cplx = [](Complex z) {
        std::ostringstream c;
        c.precision(17);
        c << "[" << z.real() << ", " << z.imag() << "]";
        return c.str();
    };
    if (spec.family != Family::Slocc) {
        field("n", std::to_string(spec.n));
    }
    switch (spec.family) {
    case Family::Dicke:
        field("r", std::to_string(spec.r));
        break;
    case Family::GhzW:
        field("alpha", cplx(spec.alpha));
        field("gamma", cplx(spec.gamma));
        break;
    case Family::GenGhz:
        field("alpha", cplx(spec.alpha));
        break;
    case Family::IsingGas: {
        std::ostringstream x;
        x.precision(17);
        x << spec.x;
        field("x", x.str());
        break;
    }
    case Family::Slocc: {
        field("class", std::to_string(spec.slocc_cls));
        const char *names[] = {"a", "b", "c", "d"};
        for (std::size_t i = 0; i < spec.slocc_params.size(); ++i) {
            field(names[i], cplx(spec.slocc_params[i]));
        }
        break;
    }
    default:
        break;
    }
    os << "}, \"seed\": " << seed << "}";
    return os.str();
}

} // namespace

void write_scatter_json(std::ostream &out, const ExperimentManifest &manifest,
                        const std::vector<ScatterRow> &rows,
                        const SampleSummary &summary) {
    out << "{\n  \"schema_version\": " << kScatterSchemaVersion << ",\n";
    out << "  \"family\": \"" << manifest.family.to_string() << "\",\n";
    out << "  \"family_spec\": " << family_spec_json(manifest.family, manifest.seed)
        << ",\n";
    out << "  \"n_states\": " << manifest.n_states << ",\n";
    out << "  \"seed\": " << manifest.seed << ",\n";
    if (manifest.header_meta) {
        out << "  \"generated_at\": \"" << timestamp_utc() << "\",\n";
    }
    out << "  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        out << "    {\"state_index\": " << r.state_index << ", \"family\": \""
            << r.family << "\", \"kind\": \"" << to_string(r.kind)
            << "\", \"delta\": " << fmt(r.delta) << ", \"ggm\": " << fmt(r.ggm)
            << ", \"f_of_g\": " << fmt(r.f_of_g)
            << ", \"bound_margin\": " << fmt(r.bound_margin)
            << ", \"route\": \"" << to_string(r.route) << "\"}"
            << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"summary\": {\"n_violations\": " << summary.n_violations
        << ", \"max_delta_minus_f\": " << fmt(summary.max_delta_minus_f)
        << ", \"min_delta\": " << fmt(summary.min_delta)
        << ", \"max_identity_residual\": "
        << fmt(summary.max_identity_residual) << "}\n}\n";
}

void write_census_csv(std::ostream &out, const std::vector<CensusRow> &rows) {
    out << "family,n,kind,n_states,pct_beta_pos,pct_r_neg,pct_h_neg,"
           "n_violations,max_delta_minus_f\n";
    for (const auto &r : rows) {
        out << r.family << ',' << r.n << ',' << to_string(r.kind) << ','
            << r.n_states << ',' << fmt(r.pct_beta_pos) << ','
            << fmt(r.pct_r_neg) << ',' << fmt(r.pct_h_neg) << ','
            << r.n_violations << ',' << fmt(r.max_delta_minus_f) << "\n";
    }
}

namespace {

struct CheckReporter {
    std::ostream &out;
    int failures = 0;
    int warnings = 0;

    void check(bool ok, const std::string &label, const std::string &detail) {
        out << (ok ? "PASS  " : "FAIL  ") << label;
        if (!detail.empty()) {
            out << "  (" << detail << ")";
        }
        out << "\n";
        if (!ok) {
            ++failures;
        }
    }
    void warn(const std::string &label, const std::string &detail) {
        out << "WARN  " << label << "  (" << detail << ")\n";
        ++warnings;
    }
};

double max_eig(const DensityOperator &op) {
    return hermitian_spectrum(op).eigenvalues.front();
}

} // namespace

int verify_families(std::ostream &out) {
    CheckReporter rep{out};
    const OptimizerConfig cfg;

    // Dicke: closed-form eigenvalues and pair measures against numerics.
    for (int n = 3; n <= 8; ++n) {
        double worst_eig = 0.0, worst_pair = 0.0, worst_d = 0.0,
               worst_red = 0.0;
        for (int r = 0; r <= n; ++r) {
            const auto state = dicke(n, r);
            const auto closed = ggm_dicke_closed_form(n, r);
            const auto report = ggm(state);
            worst_eig = std::max(worst_eig, std::abs(report.a - closed.a));
            if (closed.b.has_value() && report.b.has_value()) {
                worst_eig = std::max(worst_eig, std::abs(*report.b - *closed.b));
            }
            for (int k = 1; k <= std::min(4, n - 1); ++k) {
                std::vector<int> keep(k);
                for (int q = 0; q < k; ++q) {
                    keep[q] = q;
                }
                worst_red = std::max(
                    worst_red, dicke_reduced(n, r, k).matrix().max_abs_diff(
                                   partial_trace(state, keep).matrix()));
            }
            const auto pair = partial_trace(state, {0, 1});
            const auto cf = dicke_pair_closed_forms(n, r);
            const double c = concurrence(pair);
            const double neg = negativity(pair);
            worst_pair = std::max(worst_pair,
                                  std::abs(c * c - cf.concurrence_sq));
            worst_pair =
                std::max(worst_pair, std::abs(neg * neg - cf.negativity_sq));
            if (r > 0 && r < n) {
                worst_d = std::max(worst_d,
                                   std::abs(discord(pair, MeasuredSide::A, cfg) -
                                            cf.discord));
            }
        }
        rep.check(worst_eig < 1e-9 && worst_red < 1e-12,
                  "dicke n=" + std::to_string(n) + " spectra",
                  "max closed-form gap " + fmt(worst_eig) + ", marginal gap " +
                      fmt(worst_red));
        rep.check(worst_pair < 1e-9 && worst_d < 1e-4,
                  "dicke n=" + std::to_string(n) + " pair measures",
                  "C2/N2 gap " + fmt(worst_pair) + ", discord gap " +
                      fmt(worst_d));
    }

    // GHZ+W superpositions: closed-form GGM against the scan.
    {
        double worst = 0.0;
        Rng rng(RngStream{20260810, 1});
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 3 + trial % 5;
            Complex alpha = rng.complex_normal();
            Complex gamma = rng.complex_normal();
            const double scale = rng.uniform01() /
                                 std::sqrt(std::norm(alpha) + std::norm(gamma));
            alpha *= scale;
            gamma *= scale;
            const auto state = ghz_w(n, alpha, gamma);
            worst = std::max(worst, std::abs(ggm(state).ggm -
                                             ggm_ghzw_closed_form(alpha, gamma, n)));
        }
        rep.check(worst < 1e-9, "ghzw closed-form ggm", "max gap " + fmt(worst));
    }

    // MG ground state: nearest-neighbor marginal is Werner with Eq-level p.
    for (int n : {4, 6, 8}) {
        const auto state = mg_ground(n);
        const double p = mg_werner_p(n);
        ComplexMatrix werner(4);
        const double off = p / 2.0;
        werner(0, 0) = werner(3, 3) = (1.0 - p) / 4.0;
        werner(1, 1) = werner(2, 2) = (1.0 - p) / 4.0 + off;
        werner(1, 2) = werner(2, 1) = -off;
        const double gap =
            partial_trace(state, {0, 1}).matrix().max_abs_diff(werner);
        const double b_gap =
            std::abs(max_eig(partial_trace(state, {0, 1})) - (1.0 + 3.0 * p) / 4.0);
        rep.check(gap < 1e-10 && b_gap < 1e-10,
                  "mg n=" + std::to_string(n) + " werner marginal",
                  "p=" + fmt(p) + ", matrix gap " + fmt(gap));
        if (n >= 6) {
            const double c_far =
                concurrence(partial_trace(state, {0, 2}));
            rep.check(c_far < 1e-10,
                      "mg n=" + std::to_string(n) + " non-nearest separable",
                      "C=" + fmt(c_far));
        }
    }

    // Ising gas reduces to the half-filled Dicke state.
    {
        const auto gas = ising_gas_ground(4, 0.0);
        const auto half = dicke(4, 2);
        double gap = 0.0;
        for (std::size_t i = 0; i < gas.dim(); ++i) {
            gap = std::max(gap, std::abs(gas.amp(i) - half.amp(i)));
        }
        rep.check(gap == 0.0, "ising gas x=0 equals dicke(n, n/2)",
                  "amplitude gap " + fmt(gap));
    }

    // Ising ring: constructed pair marginal against the closed matrix.
    for (int n = 4; n <= 8; ++n) {
        const auto state = ising_ring_ground(n);
        const auto pair = partial_trace(state, {0, 1});
        const double gap =
            pair.matrix().max_abs_diff(ising_ring_pair_marginal(n));
        const double b_gap =
            std::abs(max_eig(pair) - ising_ring_pair_max_eigenvalue(n));
        rep.check(gap < 1e-9 && b_gap < 1e-9,
                  "ising ring n=" + std::to_string(n) + " pair marginal",
                  "matrix gap " + fmt(gap));
        const auto report = ggm(state);
        const double a_quoted = 0.5 * (1.0 + 1.0 / n);
        rep.check(report.single_qubit_dominates,
                  "ising ring n=" + std::to_string(n) + " 1:rest dominates",
                  "a=" + fmt(report.a) + " b=" + fmt(report.b.value_or(0.0)));
        if (std::abs(report.a - a_quoted) > 1e-9) {
            rep.warn("ising ring n=" + std::to_string(n) +
                         " 1:rest eigenvalue differs from the quoted formula",
                     "numeric a=" + fmt(report.a) + ", quoted (1/2)(1+1/n)=" +
                         fmt(a_quoted));
        }
    }

    // Parameter-free normal forms.
    {
        const auto g9 = slocc_class(9, {});
        const bool ok = std::abs(g9.amp(0) - 1.0 / std::sqrt(2.0)) < 1e-15 &&
                        std::abs(g9.amp(15) - 1.0 / std::sqrt(2.0)) < 1e-15;
        rep.check(ok, "slocc class 9 is the four-qubit ghz", "");
    }

    out << (rep.failures == 0 ? "verify-families: all checks passed"
                              : "verify-families: FAILURES present")
        << " (" << rep.warnings << " warnings)\n";
    return rep.failures;
}

} // namespace monoscope
