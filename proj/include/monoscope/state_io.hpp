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

#include <iosfwd>
#include <string>

#include "monoscope/qstate.hpp"

namespace monoscope {

/// Text format: first non-comment line is n, followed by 2^n "re im"
/// amplitude lines in basis order. '#' starts a comment. States whose
/// norm deviates from 1 by at most 1e-6 are renormalized; anything worse
/// is rejected with InvalidStateFile.
PureState read_state(std::istream &in);
PureState read_state_file(const std::string &path);

void write_state(std::ostream &out, const PureState &state);
void write_state_file(const std::string &path, const PureState &state);

} // namespace monoscope
