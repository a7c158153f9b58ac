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
#include <iosfwd>
#include <string>
#include <vector>

#include "monoscope/bounds.hpp"
#include "monoscope/families.hpp"

namespace monoscope {

constexpr int kScatterSchemaVersion = 1;

struct ExperimentManifest {
    FamilySpec family;
    long n_states = 10000;
    std::vector<MeasureKind> measures = default_measure_kinds();
    OptimizerConfig optimizer;
    std::uint64_t seed = 0;
    std::string output_path; // empty = no file
    enum class Format { Csv, Json } format = Format::Csv;
    bool header_meta = true; // emit the timestamp line
    PairConvention pair_convention = PairConvention::NodeMeasured;
    int threads = 0; // 0 = MONOSCOPE_THREADS or hardware
};

struct ScatterRow {
    long state_index = 0;
    std::string family;
    MeasureKind kind = MeasureKind::ConcurrenceSq;
    double delta = 0.0;
    double ggm = 0.0;
    double f_of_g = 0.0;
    double bound_margin = 0.0; // f_of_g - delta
    ProofRoute route = ProofRoute::Theorem1;
};

struct SampleSummary {
    long n_states = 0;
    std::vector<CensusRow> census;      // one row per measure
    long n_violations = 0;              // after re-verification
    double max_delta_minus_f = -1e300;
    double min_delta = 1e300;           // most negative score seen
    double max_identity_residual = 0.0; // |delta + H - F(G)| over beta>0
};

/// Samples n_states states, evaluates every requested measure, optionally
/// writes the scatter file, and aggregates the census. Suspected
/// violations are re-run at 4x optimizer resolution before counting.
SampleSummary run_sample(const ExperimentManifest &manifest,
                         std::vector<ScatterRow> *rows_out = nullptr);

/// One census row per (manifest, measure).
std::vector<CensusRow> run_census(const std::vector<ExperimentManifest> &manifests);

void write_scatter_csv(std::ostream &out, const ExperimentManifest &manifest,
                       const std::vector<ScatterRow> &rows);
void write_scatter_json(std::ostream &out, const ExperimentManifest &manifest,
                        const std::vector<ScatterRow> &rows,
                        const SampleSummary &summary);
void write_census_csv(std::ostream &out, const std::vector<CensusRow> &rows);

/// Closed-form cross-checks for every constructed family. Returns the
/// number of failures (warnings do not count); writes a report line per
/// check.
int verify_families(std::ostream &out);

/// Worker count resolution: explicit > MONOSCOPE_THREADS > hardware.
int resolve_thread_count(int requested);

} // namespace monoscope
