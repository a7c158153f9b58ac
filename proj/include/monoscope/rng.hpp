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
#include <random>

#include "monoscope/complex_matrix.hpp"

namespace monoscope {

/// Addresses one reproducible random stream. Distinct stream ids under the
/// same seed give independent sequences, so parallel sampling over state
/// indices is order-independent.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

/// Deterministic generator over (seed, stream_id). The engine sequence is
/// pinned by the standard and the Gaussian transform is done by hand, so
/// draws are bit-identical across platforms.
class Rng {
  public:
    explicit Rng(RngStream stream);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in (0, 1].
    double uniform01();

    /// Standard normal via Box-Muller.
    double normal();

    /// Independent N(0,1) real and imaginary parts.
    Complex complex_normal();

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace monoscope
