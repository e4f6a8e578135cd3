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

#include "latwit/states.h"

#include <cmath>
#include <numbers>

#include "latwit/error.h"
#include "latwit/linalg.h"

namespace latwit {
namespace {

double vector_norm(const std::vector<cplx> &v) {
    double s = 0;
    for (const auto &z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

void require_word(const PauliWord &w) {
    if (w.empty()) {
        throw Error(ErrorCode::LengthMismatch, "empty Pauli word");
    }
    if (w.size() > 3) {
        throw Error(ErrorCode::TooLarge, "basis vectors are built for n <= 3");
    }
}

}  // namespace

StateVector::StateVector(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
    double n = vector_norm(amps_);
    if (std::abs(n - 1) > 1e-12) {
        throw Error(ErrorCode::BadParameter, "state vector norm " + std::to_string(n) + " is not 1");
    }
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
    double n = vector_norm(amplitudes);
    if (n == 0) {
        throw Error(ErrorCode::BadParameter, "cannot normalize the zero vector");
    }
    for (auto &z : amplitudes) {
        z /= n;
    }
    return StateVector(std::move(amplitudes));
}

DensityMatrix::DensityMatrix(CMat mat, BipartiteDims dims) : mat_(std::move(mat)), dims_(dims) {
    if (dims_.total() != mat_.dim() || dims_.d1 == 0) {
        throw Error(ErrorCode::DimMismatch, "density matrix dims do not match the matrix");
    }
    if (!mat_.is_hermitian(1e-10)) {
        throw Error(ErrorCode::BadParameter, "density matrix is not Hermitian");
    }
    if (std::abs(mat_.trace() - cplx{1}) > 1e-10) {
        throw Error(ErrorCode::BadParameter, "density matrix trace is not 1");
    }
    if (min_eigenvalue(mat_, 1e-10) < -1e-9) {
        throw Error(ErrorCode::BadParameter, "density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::trusted(CMat mat, BipartiteDims dims) {
    DensityMatrix r;
    r.mat_ = std::move(mat);
    r.dims_ = dims;
    return r;
}

StateVector max_symmetric_vector(std::size_t d) {
    if (d < 2) {
        throw Error(ErrorCode::BadParameter, "max_symmetric_vector needs d >= 2");
    }
    std::vector<cplx> v(d * d);
    for (std::size_t j = 0; j < d; j++) {
        v[j * d + j] = 1 / std::sqrt(static_cast<double>(d));
    }
    return StateVector::normalized(std::move(v));
}

StateVector basis_vector(const PauliWord &w) {
    require_word(w);
    CMat sigma = word_matrix(w);
    const std::size_t d = sigma.dim();
    // (1 (x) sigma)|Psi+> = (1/sqrt d) sum_j |j> (x) sigma|j>.
    std::vector<cplx> v(d * d);
    const double s = 1 / std::sqrt(static_cast<double>(d));
    for (std::size_t j = 0; j < d; j++) {
        for (std::size_t k = 0; k < d; k++) {
            v[j * d + k] = s * sigma(k, j);
        }
    }
    return StateVector(std::move(v));
}

DensityMatrix basis_projector(const PauliWord &w) {
    std::size_t d = std::size_t{1} << w.size();
    return DensityMatrix::trusted(basis_vector(w).projector(), {d, d});
}

DensityMatrix sigma_diagonal_state(const SigmaDiagonalState &s) {
    if (s.n < 1 || s.n > 2) {
        throw Error(ErrorCode::TooLarge, "sigma-diagonal states are built for n in {1, 2}");
    }
    const std::size_t count = std::size_t{1} << (2 * s.n);
    if (s.weights.size() != count) {
        throw Error(ErrorCode::BadWeights, "weight vector must have length 4^n");
    }
    double total = 0;
    for (double r : s.weights) {
        if (!(r >= 0)) {
            throw Error(ErrorCode::BadWeights, "negative weight");
        }
        total += r;
    }
    if (std::abs(total - 1) > 1e-12) {
        throw Error(ErrorCode::BadWeights, "weights do not sum to 1");
    }
    const std::size_t d = std::size_t{1} << s.n;
    CMat rho(d * d);
    for (std::size_t idx = 0; idx < count; idx++) {
        if (s.weights[idx] != 0) {
            rho += s.weights[idx] * basis_vector(word_from_index(idx, s.n)).projector();
        }
    }
    return DensityMatrix::trusted(std::move(rho), {d, d});
}

DensityMatrix lattice_state(LatticeSubset subset) {
    if (subset.empty()) {
        throw Error(ErrorCode::EmptySubset, "lattice state of the empty subset");
    }
    const double w = 1.0 / subset.size();
    CMat rho(16);
    for (const auto &p : subset.points()) {
        rho += w * basis_vector(p.word()).projector();
    }
    return DensityMatrix::trusted(std::move(rho), {4, 4});
}

StateVector bell_state(BellKind kind) {
    const double s = 1 / std::numbers::sqrt2;
    switch (kind) {
        case BellKind::PhiPlus: return StateVector({s, 0, 0, s});
        case BellKind::PhiMinus: return StateVector({s, 0, 0, -s});
        case BellKind::PsiPlus: return StateVector({0, s, s, 0});
        case BellKind::PsiMinus: return StateVector({0, s, -s, 0});
    }
    throw Error(ErrorCode::BadParameter, "unknown Bell state");
}

DensityMatrix werner_state(double alpha) {
    if (!(alpha >= -1.0 / 3 - 1e-15 && alpha <= 1)) {
        throw Error(ErrorCode::OutOfRange, "Werner parameter must lie in [-1/3, 1]");
    }
    const double a = alpha;
    CMat m{
        1 - a, 0, 0, 0,  //
        0, 1 + a, -2 * a, 0,  //
        0, -2 * a, 1 + a, 0,  //
        0, 0, 0, 1 - a,
    };
    return DensityMatrix(0.25 * m, {2, 2});
}

std::vector<StateVector> tiles_upb() {
    const double h = 1 / std::numbers::sqrt2;
    auto ket = [](int j) {
        std::vector<cplx> v(3);
        v[static_cast<std::size_t>(j)] = 1;
        return v;
    };
    auto minus = [&](int j, int k) {
        std::vector<cplx> v(3);
        v[static_cast<std::size_t>(j)] = h;
        v[static_cast<std::size_t>(k)] = -h;
        return v;
    };
    std::vector<cplx> plus3{1, 1, 1};
    std::vector<StateVector> out;
    out.emplace_back(tensor(ket(0), minus(0, 1)));
    out.emplace_back(tensor(ket(2), minus(1, 2)));
    out.emplace_back(tensor(minus(0, 1), ket(2)));
    out.emplace_back(tensor(minus(1, 2), ket(0)));
    auto last = tensor(plus3, plus3);
    for (auto &z : last) {
        z /= 3.0;
    }
    out.emplace_back(std::move(last));
    return out;
}

DensityMatrix upb_complement_state(const std::vector<StateVector> &vectors, BipartiteDims dims) {
    const std::size_t d = dims.total();
    if (vectors.size() >= d) {
        throw Error(ErrorCode::BadParameter, "need fewer vectors than the total dimension");
    }
    for (std::size_t i = 0; i < vectors.size(); i++) {
        if (vectors[i].dim() != d) {
            throw Error(ErrorCode::DimMismatch, "vector dimension does not match dims");
        }
        for (std::size_t j = 0; j < vectors.size(); j++) {
            cplx ip = 0;
            for (std::size_t k = 0; k < d; k++) {
                ip += std::conj(vectors[i][k]) * vectors[j][k];
            }
            if (std::abs(ip - cplx(i == j ? 1.0 : 0.0)) > 1e-10) {
                throw Error(ErrorCode::NotOrthonormal, "vectors are not orthonormal");
            }
        }
    }
    CMat rho = CMat::identity(d);
    for (const auto &v : vectors) {
        rho -= v.projector();
    }
    rho *= 1.0 / static_cast<double>(d - vectors.size());
    return DensityMatrix(std::move(rho), dims);
}

std::vector<StateVector> even_d_upb(std::size_t d) {
    if (d % 2 != 0) {
        throw Error(ErrorCode::OddDim, "even_d_upb needs even d");
    }
    if (d < 4) {
        throw Error(ErrorCode::BadParameter, "even_d_upb needs d >= 4");
    }
    const cplx omega = std::polar(1.0, 4 * std::numbers::pi / static_cast<double>(d));
    std::vector<StateVector> out;
    for (int horizontal = 0; horizontal < 2; horizontal++) {
        for (std::size_t m = 1; m <= d / 2 - 1; m++) {
            for (std::size_t n = 0; n < d; n++) {
                std::vector<cplx> fixed(d);
                fixed[n] = 1;
                std::vector<cplx> spread(d);
                for (std::size_t j = 0; j < d / 2; j++) {
                    std::size_t pos = horizontal ? (j + n) % d : (j + n + 1) % d;
                    spread[pos] += std::pow(omega, static_cast<double>(j * m));
                }
                auto v = horizontal ? tensor(spread, fixed) : tensor(fixed, spread);
                out.push_back(StateVector::normalized(std::move(v)));
            }
        }
    }
    return out;
}

DensityMatrix horodecki_3x3(double a) {
    if (!(a > 0 && a < 1)) {
        throw Error(ErrorCode::OutOfRange, "horodecki_3x3 needs 0 < a < 1");
    }
    const double p = (1 + a) / 2;
    const double q = std::sqrt(1 - a * a) / 2;
    CMat m{
        a, 0, 0, 0, a, 0, 0, 0, a,  //
        0, a, 0, 0, 0, 0, 0, 0, 0,  //
        0, 0, a, 0, 0, 0, 0, 0, 0,  //
        0, 0, 0, a, 0, 0, 0, 0, 0,  //
        a, 0, 0, 0, a, 0, 0, 0, a,  //
        0, 0, 0, 0, 0, a, 0, 0, 0,  //
        0, 0, 0, 0, 0, 0, p, 0, q,  //
        0, 0, 0, 0, 0, 0, 0, a, 0,  //
        a, 0, 0, 0, a, 0, q, 0, p,
    };
    return DensityMatrix((1 / (8 * a + 1)) * m, {3, 3});
}

DensityMatrix horodecki_2x4(double b) {
    if (!(b >= 0 && b <= 1)) {
        throw Error(ErrorCode::OutOfRange, "horodecki_2x4 needs 0 <= b <= 1");
    }
    const double p = (1 + b) / 2;
    const double q = std::sqrt(1 - b * b) / 2;
    CMat m{
        b, 0, 0, 0, 0, b, 0, 0,  //
        0, b, 0, 0, 0, 0, b, 0,  //
        0, 0, b, 0, 0, 0, 0, b,  //
        0, 0, 0, b, 0, 0, 0, 0,  //
        0, 0, 0, 0, p, 0, 0, q,  //
        b, 0, 0, 0, 0, b, 0, 0,  //
        0, b, 0, 0, 0, 0, b, 0,  //
        0, 0, b, 0, q, 0, 0, p,
    };
    return DensityMatrix((1 / (7 * b + 1)) * m, {2, 4});
}

double von_neumann_entropy(const DensityMatrix &rho) {
    double s = 0;
    for (double l : hermitian_eigvals(rho.mat(), 1e-10)) {
        if (l > 1e-15) {
            s -= l * std::log(l);
        }
    }
    return s;
}

SchmidtDecomposition schmidt(const StateVector &v, BipartiteDims dims) {
    const std::size_t d1 = dims.d1;
    const std::size_t d2 = dims.d2;
    if (d1 == 0 || d2 == 0 || v.dim() != d1 * d2) {
        throw Error(ErrorCode::DimMismatch, "vector length does not match d1*d2");
    }
    const auto &a = v.amplitudes();  // a[i*d2 + k] = A_ik
    CMat aat(d1);
    for (std::size_t i = 0; i < d1; i++) {
        for (std::size_t j = 0; j < d1; j++) {
            cplx s = 0;
            for (std::size_t k = 0; k < d2; k++) {
                s += a[i * d2 + k] * std::conj(a[j * d2 + k]);
            }
            aat(i, j) = s;
        }
    }
    auto eig = hermitian_eig(aat);
    SchmidtDecomposition out;
    const std::size_t r = std::min(d1, d2);
    for (std::size_t j = 0; j < r; j++) {
        // Same clamping as singular_values: sqrt turns rounding noise of 1e-17
        // into a spurious coefficient of 3e-9.
        const double lambda = eig.values[j];
        double c = lambda < 1e-14 ? 0.0 : std::sqrt(lambda);
        out.coefficients.push_back(c);
        if (c <= 1e-10) {
            continue;
        }
        auto u = eig.vector(j);
        // Right factor: A^T conj(u) / c.
        std::vector<cplx> w(d2);
        for (std::size_t k = 0; k < d2; k++) {
            cplx s = 0;
            for (std::size_t i = 0; i < d1; i++) {
                s += a[i * d2 + k] * std::conj(u[i]);
            }
            w[k] = s / c;
        }
        out.left.push_back(std::move(u));
        out.right.push_back(std::move(w));
        out.rank++;
    }
    return out;
}

}  // namespace latwit
