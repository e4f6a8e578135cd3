// Copyright 2026 The latwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace latwit {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMat {
   public:
    CMat() = default;
    explicit CMat(std::size_t dim);
    CMat(std::size_t dim, std::vector<cplx> entries);
    /// Row-major literal; the number of entries must be a perfect square.
    CMat(std::initializer_list<cplx> entries);

    static CMat identity(std::size_t dim);
    static CMat zeros(std::size_t dim);
    static CMat diagonal(const std::vector<double> &diag);
    /// |v><v| for an arbitrary (not necessarily normalized) vector.
    static CMat outer(const std::vector<cplx> &v);
    /// |a><b|.
    static CMat outer(const std::vector<cplx> &a, const std::vector<cplx> &b);

    std::size_t dim() const noexcept {
        return dim_;
    }
    cplx &operator()(std::size_t r, std::size_t c) {
        return data_[r * dim_ + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return data_[r * dim_ + c];
    }
    cplx *data() noexcept {
        return data_.data();
    }
    const cplx *data() const noexcept {
        return data_.data();
    }
    cplx *row(std::size_t r) noexcept {
        return data_.data() + r * dim_;
    }
    const cplx *row(std::size_t r) const noexcept {
        return data_.data() + r * dim_;
    }
    const std::vector<cplx> &entries() const noexcept {
        return data_;
    }

    CMat adjoint() const;
    CMat transpose() const;
    cplx trace() const;
    double frobenius_norm() const;
    /// max_ij |M_ij - conj(M_ji)|.
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const;
    /// Decided through hermitian_eig; false for non-Hermitian input.
    bool is_psd(double tol) const;
    double max_abs_diff(const CMat &other) const;

    CMat &operator+=(const CMat &o);
    CMat &operator-=(const CMat &o);
    CMat &operator*=(cplx s);

    friend CMat operator+(CMat a, const CMat &b) {
        return a += b;
    }
    friend CMat operator-(CMat a, const CMat &b) {
        return a -= b;
    }
    friend CMat operator*(CMat a, cplx s) {
        return a *= s;
    }
    friend CMat operator*(cplx s, CMat a) {
        return a *= s;
    }
    friend CMat operator*(const CMat &a, const CMat &b);
    friend bool operator==(const CMat &a, const CMat &b) = default;

    std::vector<cplx> apply(const std::vector<cplx> &v) const;
    /// <v|M|v>.
    cplx expectation(const std::vector<cplx> &v) const;

   private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

struct BipartiteDims {
    std::size_t d1 = 0;
    std::size_t d2 = 0;
    std::size_t total() const noexcept {
        return d1 * d2;
    }
    bool operator==(const BipartiteDims &) const = default;
};

}  // namespace latwit
