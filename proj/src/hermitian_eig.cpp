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
#include "monoscope/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "monoscope/errors.hpp"

namespace monoscope {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagThreshold = 1e-13;

// One complex Jacobi rotation zeroing A(p,q). A is overwritten with
// U^dag A U where U acts on the (p,q) plane; V accumulates U.
void rotate(ComplexMatrix &a, ComplexMatrix *v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) {
        return;
    }
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const Complex phase = apq / mag;

    // Small root of t^2 - 2*tau*t - 1 = 0 for numerical stability.
    const double tau = (app - aqq) / (2.0 * mag);
    double t;
    if (std::abs(tau) > 1e150) {
        t = -1.0 / (2.0 * tau);
    } else {
        const double s = tau >= 0.0 ? 1.0 : -1.0;
        t = -s / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex sp = s * phase;

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - std::conj(sp) * akq;
        a(k, q) = sp * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - sp * aqk;
        a(q, k) = std::conj(sp) * apk + c * aqk;
    }
    // Clean up rounding in the eliminated pair.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex{a(p, p).real(), 0.0};
    a(q, q) = Complex{a(q, q).real(), 0.0};

    if (v != nullptr) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = (*v)(k, p);
            const Complex vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - std::conj(sp) * vkq;
            (*v)(k, q) = sp * vkp + c * vkq;
        }
    }
}

double off_diagonal_max(const ComplexMatrix &a) {
    double m = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m = std::max(m, std::abs(a(i, j)));
        }
    }
    return m;
}

} // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix &m, bool want_vectors,
                                  double hermitian_tol) {
    if (m.hermiticity_defect() > hermitian_tol) {
        throw NotHermitian("matrix is not Hermitian within tolerance");
    }
    const std::size_t n = m.dim();

    ComplexMatrix a = m;
    // Symmetrize: averages away sub-tolerance asymmetry.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Complex z = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
        a(i, i) = Complex{a(i, i).real(), 0.0};
    }

    ComplexMatrix vecs;
    ComplexMatrix *vp = nullptr;
    if (want_vectors) {
        vecs = ComplexMatrix::identity(n);
        vp = &vecs;
    }

    const double scale = std::max(1.0, a.max_abs());
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_max(a) <= kOffDiagThreshold * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) > kOffDiagThreshold * scale * 1e-3) {
                    rotate(a, vp, p, q);
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigenSystem out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = a(order[i], order[i]).real();
    }
    if (want_vectors) {
        ComplexMatrix sorted(n);
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t row = 0; row < n; ++row) {
                sorted(row, col) = vecs(row, order[col]);
            }
        }
        out.vectors = std::move(sorted);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m,
                                          double hermitian_tol) {
    return hermitian_eigensystem(m, false, hermitian_tol).values;
}

} // namespace monoscope
