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

#include <complex>
#include <cstddef>
#include <vector>

namespace monoscope {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for few-qubit operators
/// (dimension is a small power of two), so no blocking or views.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim)
        : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t dim() const { return dim_; }

    Complex &operator()(std::size_t i, std::size_t j) {
        return data_[i * dim_ + j];
    }
    const Complex &operator()(std::size_t i, std::size_t j) const {
        return data_[i * dim_ + j];
    }

    const std::vector<Complex> &data() const { return data_; }
    std::vector<Complex> &data() { return data_; }

    Complex trace() const {
        Complex t{0.0, 0.0};
        for (std::size_t i = 0; i < dim_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                out(j, i) = std::conj((*this)(i, j));
            }
        }
        return out;
    }

    ComplexMatrix operator*(const ComplexMatrix &rhs) const {
        ComplexMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t k = 0; k < dim_; ++k) {
                const Complex aik = (*this)(i, k);
                if (aik == Complex{0.0, 0.0}) {
                    continue;
                }
                for (std::size_t j = 0; j < dim_; ++j) {
                    out(i, j) += aik * rhs(k, j);
                }
            }
        }
        return out;
    }

    ComplexMatrix operator+(const ComplexMatrix &rhs) const {
        ComplexMatrix out(dim_);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            out.data_[i] = data_[i] + rhs.data_[i];
        }
        return out;
    }

    ComplexMatrix operator-(const ComplexMatrix &rhs) const {
        ComplexMatrix out(dim_);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            out.data_[i] = data_[i] - rhs.data_[i];
        }
        return out;
    }

    ComplexMatrix operator*(double s) const {
        ComplexMatrix out(dim_);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            out.data_[i] = data_[i] * s;
        }
        return out;
    }

    /// max |A_ij - B_ij|
    double max_abs_diff(const ComplexMatrix &rhs) const {
        double m = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            m = std::max(m, std::abs(data_[i] - rhs.data_[i]));
        }
        return m;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto &z : data_) {
            m = std::max(m, std::abs(z));
        }
        return m;
    }

    /// max |A_ij - conj(A_ji)|
    double hermiticity_defect() const {
        double m = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = i; j < dim_; ++j) {
                m = std::max(m,
                             std::abs((*this)(i, j) - std::conj((*this)(j, i))));
            }
        }
        return m;
    }

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

} // namespace monoscope
