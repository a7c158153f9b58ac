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
//
// Command-line front end: state generation and I/O, single-state reports,
// scatter sampling, the condition census, and the closed-form family
// cross-checks.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoscope/errors.hpp"
#include "monoscope/experiment.hpp"
#include "monoscope/state_io.hpp"

namespace {

using json = nlohmann::json;
using namespace monoscope;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitViolation = 3;

std::vector<MeasureKind> parse_measures(const std::string &text) {
    if (text == "all") {
        return default_measure_kinds();
    }
    std::vector<MeasureKind> kinds;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        kinds.push_back(parse_measure_kind(item));
    }
    if (kinds.empty()) {
        throw OutOfRange("at least one measure is required");
    }
    return kinds;
}

json ggm_to_json(const GgmReport &g) {
    json j;
    j["ggm"] = g.ggm;
    j["a"] = g.a;
    if (g.b.has_value()) {
        j["b"] = *g.b;
        j["beta"] = *g.beta;
    }
    j["single_qubit_dominates"] = g.single_qubit_dominates;
    j["max_cut"] = {{"part_a", g.max_cut.part_a}, {"part_b", g.max_cut.part_b}};
    return j;
}

json monogamy_to_json(const MonogamyReport &r) {
    json per_node = json::array();
    for (const auto &node : r.per_node) {
        per_node.push_back({{"node", node.node},
                            {"cut_value", node.cut_value},
                            {"partners", node.partners},
                            {"pair_values", node.pair_values},
                            {"delta", node.delta}});
    }
    return {{"kind", to_string(r.kind)},
            {"per_node", per_node},
            {"min_node", r.min_node},
            {"delta", r.delta}};
}

json verdict_to_json(const BoundVerdict &v) {
    json j;
    j["kind"] = to_string(v.kind);
    j["delta"] = v.delta;
    j["ggm"] = v.ggm_report.ggm;
    j["f_of_g"] = v.f_of_g;
    j["bound_margin"] = v.f_of_g - v.delta;
    if (v.r_term.has_value()) {
        j["r_term"] = *v.r_term;
    }
    if (v.h_term.has_value()) {
        j["h_term"] = *v.h_term;
    }
    j["cond_beta"] = v.cond_beta;
    j["cond_r_negative"] = v.cond_r_negative;
    j["cond_h_negative"] = v.cond_h_negative;
    j["bound_satisfied"] = v.bound_satisfied;
    j["proof_route"] = to_string(v.proof_route);
    return j;
}

struct CommonOpts {
    int grid_theta = 60;
    int grid_phi = 120;
    double opt_tol = 1e-6;
    std::string measures = "all";
    std::string pair_side = "node";

    OptimizerConfig optimizer() const {
        OptimizerConfig cfg;
        cfg.grid_theta = grid_theta;
        cfg.grid_phi = grid_phi;
        cfg.refine_tolerance = opt_tol;
        return cfg;
    }
    PairConvention convention() const {
        return pair_side == "partner" ? PairConvention::PartnerMeasured
                                      : PairConvention::NodeMeasured;
    }
    void attach(CLI::App *cmd) {
        cmd->add_option("--grid-theta", grid_theta,
                        "coarse measurement grid, polar steps");
        cmd->add_option("--grid-phi", grid_phi,
                        "coarse measurement grid, azimuthal steps");
        cmd->add_option("--opt-tol", opt_tol,
                        "refinement tolerance in the objective");
        cmd->add_option("--measures", measures,
                        "comma list of c2,n2,discord,workdeficit,eof or 'all'");
        cmd->add_option("--pair-measured-side", pair_side,
                        "which party is measured in pair terms: node|partner")
            ->check(CLI::IsMember({"node", "partner"}));
    }
};

int cmd_measure(const std::string &state_file, const CommonOpts &opts,
                bool verbose) {
    PureState state = read_state_file(state_file);
    const auto kinds = parse_measures(opts.measures);
    const auto cfg = opts.optimizer();
    const auto all = verdicts(state, kinds, cfg, opts.convention());

    json out;
    out["n_qubits"] = state.n_qubits();
    out["results"] = json::array();
    bool violated = false;
    for (const auto &v : all) {
        json entry;
        entry["kind"] = to_string(v.kind);
        entry["monogamy"] = monogamy_to_json(v.monogamy);
        entry["ggm"] = ggm_to_json(v.ggm_report);
        entry["verdict"] = verdict_to_json(v);
        if (verbose && (v.kind == MeasureKind::Discord ||
                        v.kind == MeasureKind::WorkDeficit)) {
            const auto flipped =
                verdict(state, v.kind, cfg,
                        opts.convention() == PairConvention::NodeMeasured
                            ? PairConvention::PartnerMeasured
                            : PairConvention::NodeMeasured);
            entry["delta_other_side"] = flipped.delta;
        }
        out["results"].push_back(std::move(entry));
        if (v.delta > v.f_of_g + kViolationTol) {
            violated = true;
        }
    }
    std::cout << out.dump(2) << "\n";
    return violated ? kExitViolation : kExitOk;
}

int cmd_gen(const std::string &family, std::uint64_t seed,
            std::uint64_t stream, const std::string &out_path) {
    const auto spec = FamilySpec::parse(family);
    const auto state = spec.make(RngStream{seed, stream});
    if (out_path.empty() || out_path == "-") {
        write_state(std::cout, state);
    } else {
        write_state_file(out_path, state);
    }
    return kExitOk;
}

ExperimentManifest make_manifest(const std::string &family, long n_states,
                                 std::uint64_t seed, const CommonOpts &opts,
                                 const std::string &out_path,
                                 const std::string &format, bool no_meta,
                                 int threads) {
    ExperimentManifest manifest;
    manifest.family = FamilySpec::parse(family);
    manifest.n_states = n_states;
    manifest.measures = parse_measures(opts.measures);
    manifest.optimizer = opts.optimizer();
    manifest.seed = seed;
    manifest.output_path = out_path;
    manifest.format = format == "json" ? ExperimentManifest::Format::Json
                                       : ExperimentManifest::Format::Csv;
    manifest.header_meta = !no_meta;
    manifest.pair_convention = opts.convention();
    manifest.threads = threads;
    return manifest;
}

int cmd_sample(const ExperimentManifest &manifest) {
    const auto summary = run_sample(manifest);
    json out;
    out["family"] = manifest.family.to_string();
    out["n_states"] = summary.n_states;
    out["n_violations"] = summary.n_violations;
    out["max_delta_minus_f"] = summary.max_delta_minus_f;
    out["min_delta"] = summary.min_delta;
    out["max_identity_residual"] = summary.max_identity_residual;
    json census = json::array();
    for (const auto &row : summary.census) {
        census.push_back({{"kind", to_string(row.kind)},
                          {"pct_beta_pos", row.pct_beta_pos},
                          {"pct_r_neg", row.pct_r_neg},
                          {"pct_h_neg", row.pct_h_neg},
                          {"n_violations", row.n_violations}});
    }
    out["census"] = std::move(census);
    std::cout << out.dump(2) << "\n";
    return summary.n_violations > 0 ? kExitViolation : kExitOk;
}

int cmd_census(const std::vector<std::string> &families, long n_states,
               std::uint64_t seed, const CommonOpts &opts,
               const std::string &out_path, int threads) {
    std::vector<ExperimentManifest> manifests;
    for (const auto &family : families) {
        manifests.push_back(make_manifest(family, n_states, seed, opts, "",
                                          "csv", false, threads));
    }
    const auto rows = run_census(manifests);
    if (out_path.empty() || out_path == "-") {
        write_census_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw monoscope::Error("cannot open output file: " + out_path);
        }
        write_census_csv(out, rows);
    }
    long violations = 0;
    for (const auto &row : rows) {
        violations += row.n_violations;
    }
    return violations > 0 ? kExitViolation : kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"bipartite quantum-correlation monogamy scores, GGM, and "
                 "multiparty entanglement bounds for few-qubit pure states"};
    app.require_subcommand(1);

    // measure
    auto *measure = app.add_subcommand(
        "measure", "monogamy, GGM, and bound verdict for one state file");
    std::string state_file;
    bool verbose = false;
    CommonOpts measure_opts;
    measure->add_option("state_file", state_file, "input state file")
        ->required();
    measure->add_flag("--verbose", verbose,
                      "also report the flipped pair-measurement convention");
    measure_opts.attach(measure);

    // gen
    auto *gen = app.add_subcommand("gen", "write a family state to a file");
    std::string gen_family, gen_out;
    std::uint64_t gen_seed = 0, gen_stream = 0;
    gen->add_option("--family", gen_family, "family spec, e.g. dicke:n=5,r=2")
        ->required();
    gen->add_option("--seed", gen_seed, "random seed for random families");
    gen->add_option("--stream", gen_stream, "stream index for random families");
    gen->add_option("--out", gen_out, "output path, '-' for stdout");

    // sample
    auto *sample = app.add_subcommand(
        "sample", "sample a family and emit scatter rows plus a summary");
    std::string sample_family, sample_out, sample_format = "csv";
    long sample_n = 10000;
    std::uint64_t sample_seed = 0;
    bool no_meta = false;
    int sample_threads = 0;
    CommonOpts sample_opts;
    sample->add_option("--family", sample_family, "family spec")->required();
    sample->add_option("--n-states", sample_n, "number of sampled states");
    sample->add_option("--seed", sample_seed, "base seed");
    sample->add_option("--out", sample_out, "scatter output path");
    sample->add_option("--format", sample_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sample->add_flag("--no-header-meta", no_meta,
                     "suppress the timestamp header line");
    sample->add_option("--threads", sample_threads,
                       "worker threads (0 = MONOSCOPE_THREADS or hardware)");
    sample_opts.attach(sample);

    // census
    auto *census = app.add_subcommand(
        "census", "condition census over one or more families");
    std::vector<std::string> census_families;
    std::string census_out;
    long census_n = 10000;
    std::uint64_t census_seed = 0;
    int census_threads = 0;
    CommonOpts census_opts;
    census->add_option("--family", census_families, "family spec (repeatable)")
        ->required();
    census->add_option("--n-states", census_n, "samples per family");
    census->add_option("--seed", census_seed, "base seed");
    census->add_option("--out", census_out, "census CSV path, '-' for stdout");
    census->add_option("--threads", census_threads, "worker threads");
    census_opts.attach(census);

    // verify-families
    auto *verify = app.add_subcommand(
        "verify-families", "closed-form cross-checks for every family");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (measure->parsed()) {
            return cmd_measure(state_file, measure_opts, verbose);
        }
        if (gen->parsed()) {
            return cmd_gen(gen_family, gen_seed, gen_stream, gen_out);
        }
        if (sample->parsed()) {
            return cmd_sample(make_manifest(sample_family, sample_n,
                                            sample_seed, sample_opts,
                                            sample_out, sample_format, no_meta,
                                            sample_threads));
        }
        if (census->parsed()) {
            return cmd_census(census_families, census_n, census_seed,
                              census_opts, census_out, census_threads);
        }
        if (verify->parsed()) {
            return verify_families(std::cout) == 0 ? kExitOk : kExitInvariant;
        }
    } catch (const monoscope::InvalidStateFile &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const monoscope::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}
