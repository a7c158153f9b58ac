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
#include "monoscope/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "monoscope/errors.hpp"
#include "monoscope/hermitian_eig.hpp"

namespace monoscope {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kValueClip = 1e-6;

void require_two_qubit(const DensityOperator &rho) {
    if (rho.n_qubits() != 2) {
        throw NotTwoQubit("operation needs a two-qubit density operator");
    }
}

void require_config(const OptimizerConfig &cfg) {
    if (cfg.grid_theta < 8 || cfg.grid_phi < 8) {
        throw OutOfRange("optimizer grid must be at least 8x8");
    }
    if (cfg.refine_tolerance <= 0.0) {
        throw OutOfRange("refine tolerance must be positive");
    }
}

double clip_nonneg(double v, const char *what) {
    if (v < -kValueClip) {
        throw OutOfRange(std::string(what) + " came out negative beyond tolerance");
    }
    return std::max(0.0, v);
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Hermitian 2x2 [[d0, off], [conj(off), d1]].
struct Herm2 {
    double d0 = 0.0;
    double d1 = 0.0;
    Complex off{0.0, 0.0};

    double trace() const { return d0 + d1; }
    // -sum mu log2 mu over both (possibly unnormalized) eigenvalues.
    double entropy_contrib() const {
        const double t = d0 + d1;
        const double g = (d0 - d1) * (d0 - d1) + 4.0 * std::norm(off);
        const double disc = std::sqrt(std::max(0.0, g));
        const double mu0 = std::max(0.0, 0.5 * (t + disc));
        const double mu1 = std::max(0.0, 0.5 * (t - disc));
        return -xlog2x(mu0) - xlog2x(mu1);
    }
};

double entropy_of(const ComplexMatrix &m) {
    double s = 0.0;
    for (const double lam : hermitian_eigenvalues(m)) {
        s -= xlog2x(std::max(0.0, lam));
    }
    return s;
}

// Precomputed pieces of the dephasing objective for one (rho, side).
// With projectors P± = (I ± n.sigma)/2 on the measured qubit, the two
// unnormalized conditional states are (rho_other ± sum_i n_i K_i)/2 where
// K_i = Tr_meas[(sigma_i x I) rho]; their four eigenvalues are also the
// spectrum of the dephased state.
struct PairContext {
    std::array<Herm2, 3> k;
    Herm2 other;
    double entropy_full = 0.0;
    double entropy_measured = 0.0;

    struct Objectives {
        double conditional = 0.0; // sum_i p_i S(rho_{other|i})
        double dephased = 0.0;    // S(sum_i P_i rho P_i)
    };

    Objectives eval(double nx, double ny, double nz) const {
        Herm2 plus, minus;
        const double md0 = nx * k[0].d0 + ny * k[1].d0 + nz * k[2].d0;
        const double md1 = nx * k[0].d1 + ny * k[1].d1 + nz * k[2].d1;
        const Complex moff = nx * k[0].off + ny * k[1].off + nz * k[2].off;
        plus.d0 = 0.5 * (other.d0 + md0);
        plus.d1 = 0.5 * (other.d1 + md1);
        plus.off = 0.5 * (other.off + moff);
        minus.d0 = 0.5 * (other.d0 - md0);
        minus.d1 = 0.5 * (other.d1 - md1);
        minus.off = 0.5 * (other.off - moff);

        Objectives out;
        out.dephased = plus.entropy_contrib() + minus.entropy_contrib();
        const double pp = std::clamp(plus.trace(), 0.0, 1.0);
        out.conditional = out.dephased + xlog2x(pp) + xlog2x(1.0 - pp);
        return out;
    }

    Objectives eval_angles(double theta, double phi) const {
        const double st = std::sin(theta);
        return eval(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
    }
};

PairContext make_pair_context(const DensityOperator &rho, MeasuredSide side) {
    require_two_qubit(rho);
    const ComplexMatrix &m = rho.matrix();
    auto at = [&m, side](int meas, int other_row, int meas2, int other_col) {
        if (side == MeasuredSide::A) {
            return m(2 * meas + other_row, 2 * meas2 + other_col);
        }
        return m(2 * other_row + meas, 2 * other_col + meas2);
    };

    PairContext ctx;
    for (int b = 0; b < 2; ++b) {
        for (int bp = 0; bp < 2; ++bp) {
            const Complex r01 = at(0, b, 1, bp);
            const Complex r10 = at(1, b, 0, bp);
            const Complex r00 = at(0, b, 0, bp);
            const Complex r11 = at(1, b, 1, bp);
            const Complex kx = r10 + r01;
            const Complex ky = Complex{0.0, 1.0} * r01 - Complex{0.0, 1.0} * r10;
            const Complex kz = r00 - r11;
            const Complex ot = r00 + r11;
            if (b == 0 && bp == 0) {
                ctx.k[0].d0 = kx.real();
                ctx.k[1].d0 = ky.real();
                ctx.k[2].d0 = kz.real();
                ctx.other.d0 = ot.real();
            } else if (b == 1 && bp == 1) {
                ctx.k[0].d1 = kx.real();
                ctx.k[1].d1 = ky.real();
                ctx.k[2].d1 = kz.real();
                ctx.other.d1 = ot.real();
            } else if (b == 0 && bp == 1) {
                ctx.k[0].off = kx;
                ctx.k[1].off = ky;
                ctx.k[2].off = kz;
                ctx.other.off = ot;
            }
        }
    }

    ctx.entropy_full = entropy_of(m);
    const auto &labels = rho.qubit_labels();
    const int meas_label =
        side == MeasuredSide::A ? labels.front() : labels.back();
    ctx.entropy_measured =
        von_neumann_entropy(hermitian_spectrum(partial_trace(rho, {meas_label})));
    return ctx;
}

enum class Objective { Conditional, Dephased };

double pick(const PairContext::Objectives &o, Objective which) {
    return which == Objective::Conditional ? o.conditional : o.dephased;
}

struct GridBest {
    double value = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

// Nelder-Mead in (theta, phi) started from the best grid point. The
// objective is smooth and periodic, so plain unconstrained simplex steps
// are fine. Throws OptimizerDiverged past the iteration cap.
GridBest nelder_mead(const PairContext &ctx, Objective which, GridBest start,
                     double dtheta, double dphi, const OptimizerConfig &cfg) {
    struct Vertex {
        double t, p, f;
    };
    auto f = [&](double t, double p) {
        return pick(ctx.eval_angles(t, p), which);
    };
    std::array<Vertex, 3> simplex{
        Vertex{start.theta, start.phi, start.value},
        Vertex{start.theta + dtheta, start.phi, f(start.theta + dtheta, start.phi)},
        Vertex{start.theta, start.phi + dphi, f(start.theta, start.phi + dphi)},
    };
    auto by_value = [](const Vertex &a, const Vertex &b) { return a.f < b.f; };

    int iters = 0;
    while (true) {
        std::sort(simplex.begin(), simplex.end(), by_value);
        if (simplex[2].f - simplex[0].f < cfg.refine_tolerance) {
            break;
        }
        if (++iters > cfg.max_refine_iters) {
            throw OptimizerDiverged("measurement refinement did not converge");
        }
        const double ct = 0.5 * (simplex[0].t + simplex[1].t);
        const double cp = 0.5 * (simplex[0].p + simplex[1].p);
        const Vertex &worst = simplex[2];

        auto make = [&](double scale) {
            Vertex v{ct + scale * (worst.t - ct), cp + scale * (worst.p - cp), 0.0};
            v.f = f(v.t, v.p);
            return v;
        };
        const Vertex reflected = make(-1.0);
        if (reflected.f < simplex[0].f) {
            const Vertex expanded = make(-2.0);
            simplex[2] = expanded.f < reflected.f ? expanded : reflected;
        } else if (reflected.f < simplex[1].f) {
            simplex[2] = reflected;
        } else {
            const Vertex contracted =
                make(reflected.f < worst.f ? -0.5 : 0.5);
            if (contracted.f < std::min(reflected.f, worst.f)) {
                simplex[2] = contracted;
            } else {
                // Shrink toward the best vertex.
                for (int i = 1; i < 3; ++i) {
                    simplex[i].t = 0.5 * (simplex[i].t + simplex[0].t);
                    simplex[i].p = 0.5 * (simplex[i].p + simplex[0].p);
                    simplex[i].f = f(simplex[i].t, simplex[i].p);
                }
            }
        }
    }
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (simplex[0].f < start.value) {
        return {simplex[0].f, simplex[0].t, simplex[0].p};
    }
    return start;
}

MeasurementSetting canonical_setting(double theta, double phi) {
    theta = std::fmod(theta, 2.0 * kPi);
    if (theta < 0.0) {
        theta += 2.0 * kPi;
    }
    if (theta > kPi) {
        theta = 2.0 * kPi - theta;
        phi += kPi;
    }
    phi = std::fmod(phi, 2.0 * kPi);
    if (phi < 0.0) {
        phi += 2.0 * kPi;
    }
    return {theta, phi};
}

struct ScanResult {
    GridBest conditional;
    GridBest dephased;
};

ScanResult scan_and_refine(const PairContext &ctx, const OptimizerConfig &cfg,
                           bool want_conditional, bool want_dephased) {
    require_config(cfg);
    GridBest best_c{1e300, 0.0, 0.0}, best_d{1e300, 0.0, 0.0};

    // The pole (sigma_z basis) is optimal for classically correlated
    // states; the offset grid below never contains it exactly.
    {
        const auto pole = ctx.eval(0.0, 0.0, 1.0);
        best_c = {pole.conditional, 0.0, 0.0};
        best_d = {pole.dephased, 0.0, 0.0};
    }

    std::vector<double> cphi(cfg.grid_phi), sphi(cfg.grid_phi);
    for (int j = 0; j < cfg.grid_phi; ++j) {
        const double phi = 2.0 * kPi * j / cfg.grid_phi;
        cphi[j] = std::cos(phi);
        sphi[j] = std::sin(phi);
    }
    auto scan_row = [&](double theta, double st, double ct) {
        for (int j = 0; j < cfg.grid_phi; ++j) {
            const auto obj = ctx.eval(st * cphi[j], st * sphi[j], ct);
            if (obj.conditional < best_c.value) {
                best_c = {obj.conditional, theta, 2.0 * kPi * j / cfg.grid_phi};
            }
            if (obj.dephased < best_d.value) {
                best_d = {obj.dephased, theta, 2.0 * kPi * j / cfg.grid_phi};
            }
        }
    };
    for (int i = 0; i < cfg.grid_theta; ++i) {
        const double theta = kPi * (i + 0.5) / cfg.grid_theta;
        scan_row(theta, std::sin(theta), std::cos(theta));
    }
    // Exact equator: sigma_x/sigma_y-plane measurements optimize the
    // X-shaped marginals this library meets constantly.
    scan_row(kPi / 2.0, 1.0, 0.0);

    const double dtheta = kPi / cfg.grid_theta;
    const double dphi = 2.0 * kPi / cfg.grid_phi;
    ScanResult out;
    if (want_conditional) {
        out.conditional =
            nelder_mead(ctx, Objective::Conditional, best_c, dtheta, dphi, cfg);
    }
    if (want_dephased) {
        out.dephased =
            nelder_mead(ctx, Objective::Dephased, best_d, dtheta, dphi, cfg);
    }
    return out;
}

} // namespace

Paradigm paradigm_of(MeasureKind kind) {
    switch (kind) {
    case MeasureKind::ConcurrenceSq:
    case MeasureKind::NegativitySq:
    case MeasureKind::EoF:
        return Paradigm::Entanglement;
    case MeasureKind::Discord:
    case MeasureKind::WorkDeficit:
        return Paradigm::InformationTheoretic;
    }
    throw OutOfRange("unknown measure kind");
}

std::string to_string(MeasureKind kind) {
    switch (kind) {
    case MeasureKind::ConcurrenceSq:
        return "c2";
    case MeasureKind::NegativitySq:
        return "n2";
    case MeasureKind::Discord:
        return "discord";
    case MeasureKind::WorkDeficit:
        return "workdeficit";
    case MeasureKind::EoF:
        return "eof";
    }
    throw OutOfRange("unknown measure kind");
}

MeasureKind parse_measure_kind(const std::string &name) {
    std::string s;
    for (const char c : name) {
        s.push_back(static_cast<char>(std::tolower(c)));
    }
    if (s == "c2" || s == "concurrence2" || s == "concurrencesq") {
        return MeasureKind::ConcurrenceSq;
    }
    if (s == "n2" || s == "negativity2" || s == "negativitysq") {
        return MeasureKind::NegativitySq;
    }
    if (s == "d" || s == "discord") {
        return MeasureKind::Discord;
    }
    if (s == "wd" || s == "workdeficit" || s == "deficit") {
        return MeasureKind::WorkDeficit;
    }
    if (s == "eof") {
        return MeasureKind::EoF;
    }
    throw OutOfRange("unknown measure kind: " + name);
}

const std::vector<MeasureKind> &default_measure_kinds() {
    static const std::vector<MeasureKind> kinds = {
        MeasureKind::ConcurrenceSq,
        MeasureKind::NegativitySq,
        MeasureKind::Discord,
        MeasureKind::WorkDeficit,
    };
    return kinds;
}

double concurrence(const DensityOperator &rho) {
    require_two_qubit(rho);
    const ComplexMatrix &m = rho.matrix();

    // The spin-flip spectrum: with any factorization rho = S S^dag, the
    // Wootters lambdas are the singular values of S^T (sigma_y x sigma_y) S
    // (padded with zeros). Dropping null directions of rho keeps the small
    // singular values exact instead of sqrt-amplifying eigensolver noise.
    const auto es = hermitian_eigensystem(m, true);
    const ComplexMatrix &v = *es.vectors;
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < 4; ++i) {
        if (es.values[i] > 1e-13) {
            cols.push_back(i);
        }
    }
    const std::size_t rank = cols.size();
    if (rank == 0) {
        return 0.0;
    }
    // S(:, c) = sqrt(lambda_c) v_c; Y S applies the spin flip, entry i of
    // column c picks up conj-free amplitude at ~i with the parity sign.
    auto sign = [](std::size_t idx) {
        return ((idx == 1 || idx == 2) ? -1.0 : 1.0);
    };
    std::vector<std::vector<Complex>> s(rank, std::vector<Complex>(4));
    for (std::size_t c = 0; c < rank; ++c) {
        const double scale = std::sqrt(es.values[cols[c]]);
        for (std::size_t i = 0; i < 4; ++i) {
            s[c][i] = scale * v(i, cols[c]);
        }
    }
    // M = S^T Y S, an rank x rank matrix.
    std::vector<std::vector<Complex>> ys(rank, std::vector<Complex>(4));
    for (std::size_t c = 0; c < rank; ++c) {
        for (std::size_t i = 0; i < 4; ++i) {
            ys[c][i] = sign(i) * s[c][3 - i];
        }
    }
    ComplexMatrix embed(2 * rank);
    for (std::size_t a = 0; a < rank; ++a) {
        for (std::size_t b = 0; b < rank; ++b) {
            Complex mab{0.0, 0.0};
            for (std::size_t i = 0; i < 4; ++i) {
                mab += s[a][i] * ys[b][i];
            }
            embed(a, rank + b) = mab;
            embed(rank + b, a) = std::conj(mab);
        }
    }
    // Eigenvalues of [[0, M], [M^dag, 0]] are +-singular values of M.
    const auto sing = hermitian_eigenvalues(embed, 1e-9);
    double lam[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < rank; ++i) {
        lam[i] = std::max(0.0, sing[i]);
    }
    return std::clamp(lam[0] - lam[1] - lam[2] - lam[3], 0.0, 1.0);
}

double negativity(const DensityOperator &rho) {
    require_two_qubit(rho);
    const auto pt = partial_transpose(rho, {rho.qubit_labels().front()});
    double neg = 0.0;
    for (const double lam : hermitian_eigenvalues(pt)) {
        if (lam < 0.0) {
            neg -= lam;
        }
    }
    return std::min(neg, 0.5);
}

double eof(const DensityOperator &rho) {
    const double c = concurrence(rho);
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

PairOptimized discord_and_work_deficit(const DensityOperator &rho,
                                       MeasuredSide side,
                                       const OptimizerConfig &cfg) {
    const auto ctx = make_pair_context(rho, side);
    const auto scan = scan_and_refine(ctx, cfg, true, true);
    PairOptimized out;
    out.discord.value = clip_nonneg(
        ctx.entropy_measured - ctx.entropy_full + scan.conditional.value,
        "discord");
    out.discord.setting =
        canonical_setting(scan.conditional.theta, scan.conditional.phi);
    out.work_deficit.value =
        clip_nonneg(scan.dephased.value - ctx.entropy_full, "work deficit");
    out.work_deficit.setting =
        canonical_setting(scan.dephased.theta, scan.dephased.phi);
    return out;
}

OptimizedValue discord_opt(const DensityOperator &rho, MeasuredSide side,
                           const OptimizerConfig &cfg) {
    const auto ctx = make_pair_context(rho, side);
    const auto scan = scan_and_refine(ctx, cfg, true, false);
    OptimizedValue out;
    out.value = clip_nonneg(
        ctx.entropy_measured - ctx.entropy_full + scan.conditional.value,
        "discord");
    out.setting = canonical_setting(scan.conditional.theta, scan.conditional.phi);
    return out;
}

double discord(const DensityOperator &rho, MeasuredSide side,
               const OptimizerConfig &cfg) {
    return discord_opt(rho, side, cfg).value;
}

OptimizedValue work_deficit_opt(const DensityOperator &rho, MeasuredSide side,
                                const OptimizerConfig &cfg) {
    const auto ctx = make_pair_context(rho, side);
    const auto scan = scan_and_refine(ctx, cfg, false, true);
    OptimizedValue out;
    out.value = clip_nonneg(scan.dephased.value - ctx.entropy_full,
                            "work deficit");
    out.setting = canonical_setting(scan.dephased.theta, scan.dephased.phi);
    return out;
}

double work_deficit(const DensityOperator &rho, MeasuredSide side,
                    const OptimizerConfig &cfg) {
    return work_deficit_opt(rho, side, cfg).value;
}

double pure_cut_measure(const PureState &state, int node, MeasureKind kind) {
    if (node < 0 || node >= state.n_qubits()) {
        throw IndexOutOfRange("node index out of range");
    }
    const auto rho = partial_trace(state, {node});
    const auto &m = rho.matrix();
    const double det =
        (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    switch (kind) {
    case MeasureKind::ConcurrenceSq:
        return std::max(0.0, 4.0 * det);
    case MeasureKind::NegativitySq:
        return std::max(0.0, det);
    case MeasureKind::Discord:
    case MeasureKind::WorkDeficit:
    case MeasureKind::EoF: {
        const double disc = std::sqrt(std::max(
            0.0, 1.0 - 4.0 * det)); // eigenvalues (1 +- disc)/2 of a qubit
        return binary_entropy(0.5 * (1.0 + disc));
    }
    }
    throw OutOfRange("unknown measure kind");
}

double measure_pair(const DensityOperator &rho, MeasureKind kind,
                    MeasuredSide side, const OptimizerConfig &cfg) {
    switch (kind) {
    case MeasureKind::ConcurrenceSq: {
        const double c = concurrence(rho);
        return c * c;
    }
    case MeasureKind::NegativitySq: {
        const double n = negativity(rho);
        return n * n;
    }
    case MeasureKind::Discord:
        return discord(rho, side, cfg);
    case MeasureKind::WorkDeficit:
        return work_deficit(rho, side, cfg);
    case MeasureKind::EoF:
        return eof(rho);
    }
    throw OutOfRange("unknown measure kind");
}

DickePairValues dicke_pair_closed_forms(int n, int r) {
    if (n < 2 || r < 0 || r > n) {
        throw InvalidExcitation("need n >= 2 and 0 <= r <= n");
    }
    const double denom = static_cast<double>(n) * n - n;
    const double u = static_cast<double>(n - r) * (n - r - 1) / denom;
    const double v = static_cast<double>(r) * (n - r) / denom;
    const double w = static_cast<double>(r) * (r - 1) / denom;

    DickePairValues out;
    const double c = 2.0 * std::max(0.0, v - std::sqrt(u * w));
    out.concurrence_sq = c * c;
    const double neg =
        0.5 * std::abs((u + w) - std::sqrt((u - w) * (u - w) + 4.0 * v * v));
    out.negativity_sq = neg * neg;

    const double l =
        0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 * (u * v + v * w + w * u))));
    const double s_marg = -xlog2x(u + v) - xlog2x(v + w);
    const double s_full = -xlog2x(u) - xlog2x(2.0 * v) - xlog2x(w);
    out.discord = s_marg - s_full + binary_entropy(l);
    return out;
}

} // namespace monoscope
