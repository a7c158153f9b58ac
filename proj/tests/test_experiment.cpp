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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "monoscope/experiment.hpp"
#include "monoscope/state_io.hpp"

using namespace monoscope;

namespace {

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string &name)
        : path(std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                 : "/tmp") +
               "/" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

int run_cli(const std::string &args) {
    const std::string cmd = std::string(MONOSCOPE_CLI_PATH) + " " + args +
                            " > /dev/null 2> /dev/null";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("run_sample aggregates a deterministic scatter") {
    ExperimentManifest manifest;
    manifest.family = FamilySpec::parse("haar:n=3");
    manifest.n_states = 24;
    manifest.seed = 11;
    manifest.measures = {MeasureKind::ConcurrenceSq, MeasureKind::Discord};
    std::vector<ScatterRow> rows;
    const auto summary = run_sample(manifest, &rows);
    CHECK(summary.n_states == 24);
    CHECK(summary.n_violations == 0);
    CHECK(rows.size() == 48);
    for (const auto &row : rows) {
        CHECK(row.bound_margin == doctest::Approx(row.f_of_g - row.delta));
        CHECK(row.route == ProofRoute::Theorem1); // three qubits
        CHECK(row.bound_margin >= -1e-6);
    }

    // Same manifest, same rows.
    std::vector<ScatterRow> rows2;
    run_sample(manifest, &rows2);
    REQUIRE(rows2.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].delta == rows2[i].delta);
        CHECK(rows[i].ggm == rows2[i].ggm);
    }
}

TEST_CASE("scatter file is byte identical without the timestamp") {
    TempFile f1("monoscope_rows1.csv"), f2("monoscope_rows2.csv");
    ExperimentManifest manifest;
    manifest.family = FamilySpec::parse("slocc:class=6");
    manifest.n_states = 12;
    manifest.seed = 3;
    manifest.header_meta = false;
    manifest.measures = {MeasureKind::ConcurrenceSq};
    manifest.output_path = f1.path;
    run_sample(manifest);
    manifest.output_path = f2.path;
    run_sample(manifest);
    const auto text1 = slurp(f1.path);
    CHECK(!text1.empty());
    CHECK(text1 == slurp(f2.path));
    CHECK(text1.find("schema_version=1") != std::string::npos);
    CHECK(text1.find("generated_at") == std::string::npos);
}

TEST_CASE("threaded and serial runs agree") {
    ExperimentManifest manifest;
    manifest.family = FamilySpec::parse("haar:n=4");
    manifest.n_states = 10;
    manifest.seed = 5;
    manifest.measures = {MeasureKind::NegativitySq};
    manifest.threads = 1;
    std::vector<ScatterRow> serial, threaded;
    run_sample(manifest, &serial);
    manifest.threads = 4;
    run_sample(manifest, &threaded);
    REQUIRE(serial.size() == threaded.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].state_index == threaded[i].state_index);
        CHECK(serial[i].delta == threaded[i].delta);
    }
}

TEST_CASE("census rows carry the family name and sizes") {
    ExperimentManifest manifest;
    manifest.family = FamilySpec::parse("dicke:n=4,r=2");
    manifest.n_states = 3;
    manifest.measures = {MeasureKind::ConcurrenceSq, MeasureKind::Discord};
    const auto rows = run_census({manifest});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].family == "dicke:n=4,r=2");
    CHECK(rows[0].n == 4);
    CHECK(rows[0].n_states == 3);
    // Half-filled Dicke: beta > 0, R < 0, H >= 0, no violations.
    CHECK(rows[0].pct_beta_pos == doctest::Approx(100.0));
    CHECK(rows[0].pct_r_neg == doctest::Approx(100.0));
    CHECK(rows[0].pct_h_neg == doctest::Approx(0.0));
    CHECK(rows[0].n_violations == 0);
}

TEST_CASE("verify_families passes") {
    std::ostringstream report;
    CHECK(verify_families(report) == 0);
    CHECK(report.str().find("FAIL") == std::string::npos);
    // The quoted 1:rest ring formula disagrees with the constructed state.
    CHECK(report.str().find("WARN") != std::string::npos);
}

TEST_CASE("cli end to end") {
    TempFile state_file("monoscope_state.txt");
    CHECK(run_cli("gen --family dicke:n=3,r=1 --out " + state_file.path) == 0);
    CHECK(run_cli("measure " + state_file.path + " --measures c2") == 0);

    // Discord on W3 is non-monogamous but bound-satisfying: still exit 0.
    CHECK(run_cli("measure " + state_file.path + " --measures discord") == 0);

    // Unparseable state file.
    {
        std::ofstream bad(state_file.path);
        bad << "2\n1 0\n"; // truncated
    }
    CHECK(run_cli("measure " + state_file.path) == 1);

    // Unknown flags and missing requireds are parse failures.
    CHECK(run_cli("measure") == 1);
    CHECK(run_cli("gen --family nosuch:n=2") == 2);

    TempFile csv("monoscope_cli_rows.csv");
    CHECK(run_cli("sample --family haar:n=3 --n-states 5 --seed 2 --out " +
                  csv.path + " --measures c2,n2 --no-header-meta") == 0);
    const auto text = slurp(csv.path);
    CHECK(text.find("state_index,family,kind,delta,ggm,f_of_g,bound_margin,"
                    "route") != std::string::npos);

    CHECK(run_cli("verify-families") == 0);

    TempFile census_csv("monoscope_cli_census.csv");
    CHECK(run_cli("census --family dicke:n=4,r=2 --family haar:n=3 "
                  "--n-states 2 --seed 1 --measures c2 --out " +
                  census_csv.path) == 0);
    const auto census_text = slurp(census_csv.path);
    CHECK(census_text.find("family,n,kind,n_states,pct_beta_pos") !=
          std::string::npos);
    CHECK(census_text.find("dicke:n=4,r=2") != std::string::npos);
}
