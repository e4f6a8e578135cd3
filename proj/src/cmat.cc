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

#include "latwit/cmat.h"

#include <algorithm>
#include <cmath>

#include "latwit/error.h"
#include "latwit/kernels.h"
#include "latwit/linalg.h"

namespace latwit {

CMat::CMat(std::size_t dim) : dim_(dim), data_(dim * dim) {
}

CMat::CMat(std::size_t dim, std::vector<cplx> entries) : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim * dim) {
        throw Error(ErrorCode::DimMismatch, "entry count does not match dim^2");
    }
}

CMat::CMat(std::initializer_list<cplx> entries) : data_(entries) {
    auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(data_.size()))));
    if (d * d != data_.size()) {
        throw Error(ErrorCode::DimMismatch, "matrix literal is not square");
    }
    dim_ = d;
}

CMat CMat::identity(std::size_t dim) {
    CMat r(dim);
    for (std::size_t i = 0; i < dim; i++) {
        r(i, i) = 1;
    }
    return r;
}

CMat CMat::zeros(std::size_t dim) {
    return CMat(dim);
}

CMat CMat::diagonal(const std::vector<double> &diag) {
    CMat r(diag.size());
    for (std::size_t i = 0; i < diag.size(); i++) {
        r(i, i) = diag[i];
    }
    return r;
}

CMat CMat::outer(const std::vector<cplx> &v) {
    return outer(v, v);
}

CMat CMat::outer(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimMismatch, "outer product of vectors with different lengths");
    }
    CMat r(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < b.size(); j++) {
            r(i, j) = a[i] * std::conj(b[j]);
        }
    }
    return r;
}

CMat CMat::adjoint() const {
    CMat r(dim_);
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t j = 0; j < dim_; j++) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

CMat CMat::transpose() const {
    CMat r(dim_);
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t j = 0; j < dim_; j++) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

cplx CMat::trace() const {
    cplx t = 0;
    for (std::size_t i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

double CMat::frobenius_norm() const {
    double s = 0;
    for (const auto &z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double CMat::hermiticity_defect() const {
    double worst = 0;
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t j = i; j < dim_; j++) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

bool CMat::is_hermitian(double tol) const {
    return hermiticity_defect() <= tol;
}

bool CMat::is_psd(double tol) const {
    if (!is_hermitian(tol)) {
        return false;
    }
    return min_eigenvalue(*this, tol) >= -tol;
}

double CMat::max_abs_diff(const CMat &other) const {
    if (other.dim_ != dim_) {
        throw Error(ErrorCode::DimMismatch, "max_abs_diff of matrices with different dims");
    }
    double worst = 0;
    for (std::size_t i = 0; i < data_.size(); i++) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

CMat &CMat::operator+=(const CMat &o) {
    if (o.dim_ != dim_) {
        throw Error(ErrorCode::DimMismatch, "matrix sum with different dims");
    }
    for (std::size_t i = 0; i < data_.size(); i++) {
        data_[i] += o.data_[i];
    }
    return *this;
}

CMat &CMat::operator-=(const CMat &o) {
    if (o.dim_ != dim_) {
        throw Error(ErrorCode::DimMismatch, "matrix difference with different dims");
    }
    for (std::size_t i = 0; i < data_.size(); i++) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

CMat &CMat::operator*=(cplx s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

CMat operator*(const CMat &a, const CMat &b) {
    if (a.dim_ != b.dim_) {
        throw Error(ErrorCode::DimMismatch, "matrix product with different dims");
    }
    CMat c(a.dim_);
    kernels::active().matmul(a.dim_, a.data(), b.data(), c.data());
    return c;
}

std::vector<cplx> CMat::apply(const std::vector<cplx> &v) const {
    if (v.size() != dim_) {
        throw Error(ErrorCode::DimMismatch, "matrix-vector product with different dims");
    }
    std::vector<cplx> out(dim_);
    kernels::active().matvec(dim_, data(), v.data(), out.data());
    return out;
}

cplx CMat::expectation(const std::vector<cplx> &v) const {
    auto mv = apply(v);
    return kernels::active().dotc(dim_, v.data(), mv.data());
}

}  // namespace latwit
