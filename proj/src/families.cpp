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
#include "monoscope/families.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

#include "monoscope/errors.hpp"

namespace monoscope {

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    double out = 1.0;
    for (int i = 1; i <= k; ++i) {
        out *= static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return std::round(out);
}

void check_n(int n, int min_n = 2) {
    if (n < min_n) {
        throw InvalidAmplitudes("too few qubits for this family");
    }
    if (n > kDefaultQubitCap) {
        throw TooManyQubits("qubit count exceeds the configured cap");
    }
}

std::size_t popcount(std::size_t x) { return std::popcount(x); }

// Equal weight-r superposition; also used for the k-qubit projectors of
// dicke_reduced, where k = 1 is legitimate.
std::vector<Complex> dicke_amplitudes(int n, int r) {
    const std::size_t dim = std::size_t{1} << n;
    const double amp = 1.0 / std::sqrt(binomial(n, r));
    std::vector<Complex> v(dim, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) {
        if (popcount(i) == static_cast<std::size_t>(r)) {
            v[i] = amp;
        }
    }
    return v;
}

} // namespace

PureState dicke(int n, int r) {
    check_n(n);
    if (r < 0 || r > n) {
        throw InvalidExcitation("excitation count must lie in [0, n]");
    }
    return PureState(n, dicke_amplitudes(n, r));
}

DensityOperator dicke_reduced(int n, int r, int k) {
    check_n(n);
    if (r < 0 || r > n) {
        throw InvalidExcitation("excitation count must lie in [0, n]");
    }
    if (k < 1 || k >= n) {
        throw InvalidBipartition("marginal size must lie in [1, n-1]");
    }
    const std::size_t dim = std::size_t{1} << k;
    ComplexMatrix rho(dim);
    const double total = binomial(n, r);
    for (int i = 0; i <= k; ++i) {
        const double weight = binomial(k, i) * binomial(n - k, r - i) / total;
        if (weight == 0.0) {
            continue;
        }
        const auto proj = dicke_amplitudes(k, i);
        for (std::size_t a = 0; a < dim; ++a) {
            if (proj[a] == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t b = 0; b < dim; ++b) {
                rho(a, b) += weight * proj[a] * std::conj(proj[b]);
            }
        }
    }
    std::vector<int> labels(k);
    for (int q = 0; q < k; ++q) {
        labels[q] = q;
    }
    return DensityOperator(std::move(labels), std::move(rho));
}

PureState ghz_w(int n, Complex alpha, Complex gamma) {
    check_n(n, 2);
    const double rest = 1.0 - std::norm(alpha) - std::norm(gamma);
    if (rest < -1e-12) {
        throw InvalidAmplitudes("|alpha|^2 + |gamma|^2 exceeds 1");
    }
    const double beta = std::sqrt(std::max(0.0, rest));
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> v(dim, Complex{0.0, 0.0});
    v[0] = alpha;
    v[dim - 1] += beta;
    const Complex w_amp = gamma / std::sqrt(static_cast<double>(n));
    for (int q = 0; q < n; ++q) {
        v[std::size_t{1} << (n - 1 - q)] += w_amp;
    }
    return PureState::normalized(n, std::move(v));
}

namespace {

// Product of singlets over disjoint bonds, expanded into amplitudes.
void add_dimer_product(std::vector<Complex> &v, int n,
                       const std::vector<std::pair<int, int>> &bonds,
                       double scale) {
    const int nb = static_cast<int>(bonds.size());
    for (std::size_t pattern = 0; pattern < (std::size_t{1} << nb); ++pattern) {
        std::size_t idx = 0;
        double sign = 1.0;
        for (int i = 0; i < nb; ++i) {
            const auto [p, q] = bonds[i];
            if (((pattern >> i) & 1u) == 0) {
                idx |= std::size_t{1} << (n - 1 - q); // |0_p 1_q>
            } else {
                idx |= std::size_t{1} << (n - 1 - p); // -|1_p 0_q>
                sign = -sign;
            }
        }
        v[idx] += sign * scale;
    }
}

} // namespace

PureState mg_ground(int n) {
    if (n % 2 != 0) {
        throw OddChainLength("the dimerized chain needs an even site count");
    }
    check_n(n, 4);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> v(dim, Complex{0.0, 0.0});
    const double scale = std::pow(2.0, -n / 4.0);
    // Bonds (2i, 2i+1) and (2i, 2i-1) on the 1-based ring.
    std::vector<std::pair<int, int>> plus, minus;
    for (int i = 1; i <= n / 2; ++i) {
        plus.emplace_back((2 * i - 1) % n, (2 * i) % n);
        minus.emplace_back((2 * i - 1) % n, (2 * i - 2) % n);
    }
    add_dimer_product(v, n, plus, scale);
    add_dimer_product(v, n, minus, scale);
    return PureState::normalized(n, std::move(v));
}

double mg_werner_p(int n) {
    if (n % 2 != 0 || n < 4) {
        throw OddChainLength("the dimerized chain needs an even site count");
    }
    return (1.0 + std::pow(2.0, n / 2.0 - 2.0)) /
           (1.0 + std::pow(2.0, n / 2.0 - 1.0));
}

PureState ising_gas_ground(int n, double x) {
    check_n(n);
    const double r_real = n * (1.0 - x) / 2.0;
    const double z_real = n * (1.0 + x) / 2.0;
    const double r_round = std::round(r_real);
    if (std::abs(r_real - r_round) > 1e-9 ||
        std::abs(z_real - std::round(z_real)) > 1e-9) {
        throw NonIntegerOccupation("n(1 +- x)/2 must both be integers");
    }
    const int r = static_cast<int>(r_round);
    if (r < 0 || r > n) {
        throw NonIntegerOccupation("magnetization offset out of range");
    }
    return dicke(n, r);
}

PureState ising_ring_ground(int n) {
    if (n < 4) {
        throw ChainTooShort("the ring needs at least four sites");
    }
    check_n(n, 4);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> v(dim, Complex{0.0, 0.0});
    const std::size_t all_ones = dim - 1;
    auto prefix_ones = [&](int count) {
        // |1^count 0^(n-count)>
        return count == 0 ? std::size_t{0}
                          : (all_ones >> (n - count)) << (n - count);
    };
    auto suffix_ones = [&](int count) {
        // |0^(n-count) 1^count>
        return count == 0 ? std::size_t{0} : all_ones >> (n - count);
    };
    for (int k = 0; k < n; ++k) {
        v[suffix_ones(k)] += 1.0;            // |0^(n-k) 1^k>
        v[prefix_ones(n - k)] += 1.0;        // |1^(n-k) 0^k>
        v[prefix_ones(k + 1)] += 1.0;        // |1^(k+1) 0^(n-k-1)>
        v[suffix_ones(n - k - 1)] += 1.0;    // |0^(k+1) 1^(n-k-1)>
    }
    return PureState::normalized(n, std::move(v));
}

ComplexMatrix ising_ring_pair_marginal(int n) {
    if (n < 4) {
        throw ChainTooShort("the ring needs at least four sites");
    }
    ComplexMatrix m(4);
    const double s = 1.0 / (2.0 * n);
    const double row0[4] = {double(n - 1), 1, 1, 2};
    const double row1[4] = {1, 1, 0, 1};
    const double row2[4] = {1, 0, 1, 1};
    const double row3[4] = {2, 1, 1, double(n - 1)};
    const double *rows[4] = {row0, row1, row2, row3};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m(i, j) = rows[i][j] * s;
        }
    }
    return m;
}

double ising_ring_pair_max_eigenvalue(int n) {
    return (n + 2.0 + std::sqrt(n * n + 16.0)) / (4.0 * n);
}

int slocc_param_count(int cls) {
    switch (cls) {
    case 1:
        return 4;
    case 2:
        return 3;
    case 3:
    case 4:
        return 2;
    case 5:
    case 6:
        return 1;
    case 7:
    case 8:
    case 9:
        return 0;
    default:
        throw WrongParamCount("normal-form class must lie in 1..9");
    }
}

PureState slocc_class(int cls, const std::vector<Complex> &params,
                      bool normalize) {
    const int expect = slocc_param_count(cls);
    if (static_cast<int>(params.size()) != expect) {
        throw WrongParamCount("wrong parameter count for this class");
    }
    for (const auto &p : params) {
        if (p.real() < 0.0) {
            throw NegativeRealPart("normal-form parameters need Re >= 0");
        }
    }
    std::vector<Complex> v(16, Complex{0.0, 0.0});
    auto put = [&v](unsigned bits, Complex amp) { v[bits] += amp; };
    const Complex i_unit{0.0, 1.0};
    switch (cls) {
    case 1: {
        const Complex a = params[0], b = params[1], c = params[2],
                      d = params[3];
        put(0b0000, (a + d) / 2.0);
        put(0b1111, (a + d) / 2.0);
        put(0b0011, (a - d) / 2.0);
        put(0b1100, (a - d) / 2.0);
        put(0b0101, (b + c) / 2.0);
        put(0b1010, (b + c) / 2.0);
        put(0b0110, (b - c) / 2.0);
        put(0b1001, (b - c) / 2.0);
        break;
    }
    case 2: {
        const Complex a = params[0], b = params[1], c = params[2];
        put(0b0000, (a + b) / 2.0);
        put(0b1111, (a + b) / 2.0);
        put(0b0011, (a - b) / 2.0);
        put(0b1100, (a - b) / 2.0);
        put(0b0101, c);
        put(0b1010, c);
        put(0b0110, 1.0);
        break;
    }
    case 3: {
        const Complex a = params[0], b = params[1];
        put(0b0000, a);
        put(0b1111, a);
        put(0b0101, b);
        put(0b1010, b);
        put(0b0110, 1.0);
        put(0b0011, 1.0);
        break;
    }
    case 4: {
        const Complex a = params[0], b = params[1];
        put(0b0000, a);
        put(0b1111, a);
        put(0b0101, (a + b) / 2.0);
        put(0b1010, (a + b) / 2.0);
        put(0b0110, (a - b) / 2.0);
        put(0b1001, (a - b) / 2.0);
        const Complex e = i_unit / std::sqrt(2.0);
        put(0b0001, e);
        put(0b0010, e);
        put(0b0111, e);
        put(0b1011, e);
        break;
    }
    case 5: {
        const Complex a = params[0];
        put(0b0000, a);
        put(0b0101, a);
        put(0b1010, a);
        put(0b1111, a);
        put(0b0001, i_unit);
        put(0b1011, -i_unit);
        put(0b0110, 1.0);
        break;
    }
    case 6: {
        const Complex a = params[0];
        put(0b0000, a);
        put(0b1111, a);
        put(0b0011, 1.0);
        put(0b0101, 1.0);
        put(0b0110, 1.0);
        break;
    }
    case 7:
        put(0b0000, 1.0);
        put(0b0101, 1.0);
        put(0b1000, 1.0);
        put(0b1110, 1.0);
        break;
    case 8:
        put(0b0000, 1.0);
        put(0b1011, 1.0);
        put(0b1101, 1.0);
        put(0b1110, 1.0);
        break;
    case 9:
        put(0b0000, 1.0);
        put(0b1111, 1.0);
        break;
    default:
        throw WrongParamCount("normal-form class must lie in 1..9");
    }
    if (normalize) {
        return PureState::normalized(4, std::move(v));
    }
    return PureState(4, std::move(v));
}

PureState haar_random(int n, Rng &rng) {
    check_n(n);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> v(dim);
    for (auto &z : v) {
        z = rng.complex_normal();
    }
    return PureState::normalized(n, std::move(v));
}

PureState symmetric_random(int n, Rng &rng) {
    check_n(n);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> v(dim, Complex{0.0, 0.0});
    for (int r = 0; r <= n; ++r) {
        const Complex coeff = rng.complex_normal();
        const double amp = 1.0 / std::sqrt(binomial(n, r));
        for (std::size_t i = 0; i < dim; ++i) {
            if (popcount(i) == static_cast<std::size_t>(r)) {
                v[i] += coeff * amp;
            }
        }
    }
    return PureState::normalized(n, std::move(v));
}

PureState slocc_random(int cls, Rng &rng) {
    if (cls < 1 || cls > 6) {
        throw WrongParamCount("only classes 1..6 are parameterized");
    }
    std::vector<Complex> params(slocc_param_count(cls));
    for (auto &p : params) {
        const Complex z = rng.complex_normal();
        p = Complex{std::abs(z.real()), z.imag()};
    }
    return slocc_class(cls, params);
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string &text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw InvalidAmplitudes("family parameter needs key=value: " + item);
        }
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

Complex parse_complex(const std::string &text) {
    // Accepts "re", "re+imi", "re-imi".
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' &&
            text[i - 1] != 'E') {
            split = i;
        }
    }
    try {
        if (split == std::string::npos || text.back() != 'i') {
            return Complex{std::stod(text), 0.0};
        }
        const double re = std::stod(text.substr(0, split));
        const double im = std::stod(text.substr(split, text.size() - split - 1));
        return Complex{re, im};
    } catch (const std::exception &) {
        throw InvalidAmplitudes("cannot parse complex number: " + text);
    }
}

std::string format_complex(Complex z) {
    std::ostringstream os;
    os.precision(12);
    os << z.real();
    if (z.imag() != 0.0) {
        os << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
    }
    return os.str();
}

int require_int(const std::map<std::string, std::string> &kv,
                const std::string &key) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
        throw InvalidAmplitudes("family spec missing key: " + key);
    }
    return std::stoi(it->second);
}

} // namespace

FamilySpec FamilySpec::parse(const std::string &text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const auto kv =
        colon == std::string::npos ? std::map<std::string, std::string>{}
                                   : parse_kv(text.substr(colon + 1));
    FamilySpec spec;
    if (name == "dicke") {
        spec.family = Family::Dicke;
        spec.n = require_int(kv, "n");
        spec.r = require_int(kv, "r");
    } else if (name == "ghzw") {
        spec.family = Family::GhzW;
        spec.n = require_int(kv, "n");
        spec.alpha = parse_complex(kv.at("alpha"));
        spec.gamma = parse_complex(kv.at("gamma"));
    } else if (name == "genghz") {
        spec.family = Family::GenGhz;
        spec.n = require_int(kv, "n");
        spec.alpha = parse_complex(kv.at("alpha"));
    } else if (name == "mg") {
        spec.family = Family::MG;
        spec.n = require_int(kv, "n");
    } else if (name == "ising_gas") {
        spec.family = Family::IsingGas;
        spec.n = require_int(kv, "n");
        spec.x = std::stod(kv.at("x"));
    } else if (name == "ising_ring") {
        spec.family = Family::IsingRing;
        spec.n = require_int(kv, "n");
    } else if (name == "slocc") {
        spec.family = Family::Slocc;
        spec.slocc_cls = require_int(kv, "class");
        spec.n = 4;
        for (const char *key : {"a", "b", "c", "d"}) {
            const auto it = kv.find(key);
            if (it != kv.end()) {
                spec.slocc_params.push_back(parse_complex(it->second));
            }
        }
        if (!spec.slocc_params.empty() &&
            static_cast<int>(spec.slocc_params.size()) !=
                slocc_param_count(spec.slocc_cls)) {
            throw WrongParamCount("wrong parameter count for this class");
        }
    } else if (name == "symmetric") {
        spec.family = Family::SymmetricRandom;
        spec.n = require_int(kv, "n");
    } else if (name == "haar") {
        spec.family = Family::HaarRandom;
        spec.n = require_int(kv, "n");
    } else {
        throw InvalidAmplitudes("unknown family: " + name);
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    os.precision(12);
    switch (family) {
    case Family::Dicke:
        os << "dicke:n=" << n << ",r=" << r;
        break;
    case Family::GhzW:
        os << "ghzw:n=" << n << ",alpha=" << format_complex(alpha)
           << ",gamma=" << format_complex(gamma);
        break;
    case Family::GenGhz:
        os << "genghz:n=" << n << ",alpha=" << format_complex(alpha);
        break;
    case Family::MG:
        os << "mg:n=" << n;
        break;
    case Family::IsingGas:
        os << "ising_gas:n=" << n << ",x=" << x;
        break;
    case Family::IsingRing:
        os << "ising_ring:n=" << n;
        break;
    case Family::Slocc: {
        os << "slocc:class=" << slocc_cls;
        const char *names[] = {"a", "b", "c", "d"};
        for (std::size_t i = 0; i < slocc_params.size(); ++i) {
            os << "," << names[i] << "=" << format_complex(slocc_params[i]);
        }
        break;
    }
    case Family::SymmetricRandom:
        os << "symmetric:n=" << n;
        break;
    case Family::HaarRandom:
        os << "haar:n=" << n;
        break;
    }
    return os.str();
}

int FamilySpec::n_qubits() const { return family == Family::Slocc ? 4 : n; }

bool FamilySpec::is_random() const {
    return family == Family::HaarRandom ||
           family == Family::SymmetricRandom ||
           (family == Family::Slocc && slocc_params.empty() &&
            slocc_param_count(slocc_cls) > 0);
}

PureState FamilySpec::make(RngStream stream) const {
    switch (family) {
    case Family::Dicke:
        return dicke(n, r);
    case Family::GhzW:
        return ghz_w(n, alpha, gamma);
    case Family::GenGhz:
        return ghz_w(n, alpha, Complex{0.0, 0.0});
    case Family::MG:
        return mg_ground(n);
    case Family::IsingGas:
        return ising_gas_ground(n, x);
    case Family::IsingRing:
        return ising_ring_ground(n);
    case Family::Slocc:
        if (!slocc_params.empty() || slocc_param_count(slocc_cls) == 0) {
            return slocc_class(slocc_cls, slocc_params);
        } else {
            Rng rng(stream);
            return slocc_random(slocc_cls, rng);
        }
    case Family::SymmetricRandom: {
        Rng rng(stream);
        return symmetric_random(n, rng);
    }
    case Family::HaarRandom: {
        Rng rng(stream);
        return haar_random(n, rng);
    }
    }
    throw InvalidAmplitudes("unhandled family");
}

} // namespace monoscope
