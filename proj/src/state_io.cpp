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
#include "monoscope/state_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "monoscope/errors.hpp"

namespace monoscope {

namespace {

constexpr double kFileNormTol = 1e-6;

// Next line with content, comments and blanks skipped.
bool next_payload_line(std::istream &in, std::string &line) {
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const auto pos = line.find_first_not_of(" \t\r\n");
        if (pos != std::string::npos) {
            return true;
        }
    }
    return false;
}

} // namespace

PureState read_state(std::istream &in) {
    std::string line;
    if (!next_payload_line(in, line)) {
        throw InvalidStateFile("missing qubit count");
    }
    int n = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> n) || n < 1 || n > kDefaultQubitCap) {
            throw InvalidStateFile("bad qubit count line: " + line);
        }
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> amps(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!next_payload_line(in, line)) {
            throw InvalidStateFile("missing amplitude line");
        }
        std::istringstream ls(line);
        double re = 0.0, im = 0.0;
        if (!(ls >> re >> im)) {
            throw InvalidStateFile("bad amplitude line: " + line);
        }
        amps[i] = Complex{re, im};
    }
    double norm2 = 0.0;
    for (const auto &z : amps) {
        norm2 += std::norm(z);
    }
    if (std::abs(norm2 - 1.0) > kFileNormTol) {
        throw InvalidStateFile("state norm differs from 1 beyond 1e-6");
    }
    return PureState::normalized(n, std::move(amps));
}

PureState read_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidStateFile("cannot open state file: " + path);
    }
    return read_state(in);
}

void write_state(std::ostream &out, const PureState &state) {
    out << state.n_qubits() << "\n";
    out.precision(17);
    for (const auto &z : state.amplitudes()) {
        out << z.real() << " " << z.imag() << "\n";
    }
}

void write_state_file(const std::string &path, const PureState &state) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidStateFile("cannot open output file: " + path);
    }
    write_state(out, state);
}

} // namespace monoscope
