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

#include "latwit/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "latwit/error.h"
#include "latwit/kernels.h"

namespace latwit {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeOffTolerance = 1e-12;

double off_diagonal_norm(const CMat &a) {
    double s = 0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < a.dim(); j++) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

// Diagonalizes `a` in place. When `vt` is non-null its rows accumulate the
// eigenvectors (vt = V^T).
void jacobi(CMat &a, CMat *vt) {
    const auto &k = kernels::active();
    const std::size_t n = a.dim();
    const double scale = a.frobenius_norm();
    if (n < 2 || scale == 0) {
        return;
    }
    const double target = kRelativeOffTolerance * scale;
    for (int sweep = 0; sweep <= kMaxSweeps; sweep++) {
        if (off_diagonal_norm(a) < target) {
            return;
        }
        if (sweep == kMaxSweeps) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                cplx b = a(p, q);
                double absb = std::abs(b);
                if (absb == 0) {
                    continue;
                }
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                // After a few sweeps, drop elements too small to move the diagonal.
                if (sweep > 3 && std::abs(app) + 100 * absb == std::abs(app) &&
                    std::abs(aqq) + 100 * absb == std::abs(aqq)) {
                    a(p, q) = 0;
                    a(q, p) = 0;
                    continue;
                }
                double zeta = (aqq - app) / (2 * absb);
                double t;
                if (std::abs(zeta) > 1e150) {
                    t = 0.5 / zeta;
                } else {
                    t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                }
                double c = 1 / std::sqrt(1 + t * t);
                cplx s = (t * c) * (b / absb);
                // Rows: A <- U^dagger A. Columns follow from Hermiticity.
                k.rotate(n, a.row(p), a.row(q), c, std::conj(s));
                for (std::size_t r = 0; r < n; r++) {
                    if (r != p && r != q) {
                        a(r, p) = std::conj(a(p, r));
                        a(r, q) = std::conj(a(q, r));
                    }
                }
                a(p, p) = app - t * absb;
                a(q, q) = aqq + t * absb;
                a(p, q) = 0;
                a(q, p) = 0;
                if (vt != nullptr) {
                    k.rotate(n, vt->row(p), vt->row(q), c, s);
                }
            }
        }
    }
    throw Error(ErrorCode::NoConvergence, "Jacobi sweep cap exceeded");
}

CMat symmetrized(const CMat &m, double tol) {
    double defect = m.hermiticity_defect();
    if (!(defect <= tol)) {
        throw Error(ErrorCode::NotHermitian, "max |M - M^dagger| = " + std::to_string(defect));
    }
    CMat a(m.dim());
    for (std::size_t i = 0; i < m.dim(); i++) {
        a(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < m.dim(); j++) {
            cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    return a;
}

void require_bipartite(const CMat &m, BipartiteDims dims) {
    if (dims.d1 == 0 || dims.d2 == 0 || dims.total() != m.dim()) {
        throw Error(ErrorCode::DimMismatch, "matrix dim " + std::to_string(m.dim()) + " is not d1*d2 = " +
                                                std::to_string(dims.d1) + "*" + std::to_string(dims.d2));
    }
}

}  // namespace

std::vector<cplx> EigenDecomposition::vector(std::size_t j) const {
    std::vector<cplx> v(vectors.dim());
    for (std::size_t i = 0; i < v.size(); i++) {
        v[i] = vectors(i, j);
    }
    return v;
}

EigenDecomposition hermitian_eig(const CMat &m, double tol) {
    CMat a = symmetrized(m, tol);
    const std::size_t n = a.dim();
    CMat vt = CMat::identity(n);
    jacobi(a, &vt);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
    EigenDecomposition out{std::vector<double>(n), CMat(n)};
    for (std::size_t j = 0; j < n; j++) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; i++) {
            out.vectors(i, j) = vt(order[j], i);
        }
    }
    return out;
}

std::vector<double> hermitian_eigvals(const CMat &m, double tol) {
    CMat a = symmetrized(m, tol);
    jacobi(a, nullptr);
    std::vector<double> values(a.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        values[i] = a(i, i).real();
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

double min_eigenvalue(const CMat &m, double tol) {
    auto values = hermitian_eigvals(m, tol);
    return values.empty() ? 0.0 : values.back();
}

std::vector<double> singular_values(const CMat &m) {
    CMat gram = m.adjoint() * m;
    auto values = hermitian_eigvals(gram, std::max(1e-9, 1e-12 * gram.frobenius_norm()));
    // Eigenvalues of M^dagger M carry rounding noise proportional to the
    // largest one; below that floor the square root would inflate it.
    const double floor = 1e-14 * std::max(1.0, values.empty() ? 0.0 : values.front());
    for (auto &v : values) {
        v = std::abs(v) < floor ? 0.0 : std::sqrt(std::max(0.0, v));
    }
    return values;
}

double trace_norm(const CMat &m) {
    auto s = singular_values(m);
    return std::accumulate(s.begin(), s.end(), 0.0);
}

cplx hs_inner(const CMat &a, const CMat &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimMismatch, "hs_inner of matrices with different dims");
    }
    return kernels::active().dotc(a.dim() * a.dim(), a.data(), b.data());
}

CMat tensor(const CMat &a, const CMat &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    CMat r(da * db);
    for (std::size_t i = 0; i < da; i++) {
        for (std::size_t j = 0; j < da; j++) {
            cplx aij = a(i, j);
            for (std::size_t k = 0; k < db; k++) {
                for (std::size_t l = 0; l < db; l++) {
                    r(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return r;
}

std::vector<cplx> tensor(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    std::vector<cplx> r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t k = 0; k < b.size(); k++) {
            r[i * b.size() + k] = a[i] * b[k];
        }
    }
    return r;
}

CMat partial_trace(const CMat &m, BipartiteDims dims, int which) {
    require_bipartite(m, dims);
    const std::size_t d1 = dims.d1;
    const std::size_t d2 = dims.d2;
    if (which == 1) {
        CMat r(d2);
        for (std::size_t k = 0; k < d2; k++) {
            for (std::size_t l = 0; l < d2; l++) {
                cplx s = 0;
                for (std::size_t i = 0; i < d1; i++) {
                    s += m(i * d2 + k, i * d2 + l);
                }
                r(k, l) = s;
            }
        }
        return r;
    }
    if (which == 2) {
        CMat r(d1);
        for (std::size_t i = 0; i < d1; i++) {
            for (std::size_t j = 0; j < d1; j++) {
                cplx s = 0;
                for (std::size_t k = 0; k < d2; k++) {
                    s += m(i * d2 + k, j * d2 + k);
                }
                r(i, j) = s;
            }
        }
        return r;
    }
    throw Error(ErrorCode::BadParameter, "party index must be 1 or 2");
}

CMat partial_transpose(const CMat &m, BipartiteDims dims, int which) {
    require_bipartite(m, dims);
    if (which != 1 && which != 2) {
        throw Error(ErrorCode::BadParameter, "party index must be 1 or 2");
    }
    const std::size_t d1 = dims.d1;
    const std::size_t d2 = dims.d2;
    CMat r(m.dim());
    for (std::size_t i = 0; i < d1; i++) {
        for (std::size_t j = 0; j < d1; j++) {
            for (std::size_t k = 0; k < d2; k++) {
                for (std::size_t l = 0; l < d2; l++) {
                    if (which == 2) {
                        r(i * d2 + k, j * d2 + l) = m(i * d2 + l, j * d2 + k);
                    } else {
                        r(i * d2 + k, j * d2 + l) = m(j * d2 + k, i * d2 + l);
                    }
                }
            }
        }
    }
    return r;
}

CMat reshuffle(const CMat &m, BipartiteDims dims) {
    require_bipartite(m, dims);
    if (dims.d1 != dims.d2) {
        throw Error(ErrorCode::NonSquareParties, "reshuffle is implemented for d1 == d2 only");
    }
    const std::size_t d = dims.d1;
    CMat r(m.dim());
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t mu = 0; mu < d; mu++) {
            for (std::size_t n = 0; n < d; n++) {
                for (std::size_t nu = 0; nu < d; nu++) {
                    r(i * d + mu, n * d + nu) = m(nu * d + mu, n * d + i);
                }
            }
        }
    }
    return r;
}

}  // namespace latwit
