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

#include "latwit/maps.h"

#include <cmath>

#include "latwit/error.h"
#include "latwit/linalg.h"
#include "latwit/seesaw.h"

namespace latwit {
namespace {

std::size_t words_for(int n) {
    return std::size_t{1} << (2 * n);
}

CMat flip(std::size_t d) {
    CMat v(d * d);
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t j = 0; j < d; j++) {
            v(i * d + j, j * d + i) = 1;
        }
    }
    return v;
}

}  // namespace

ChoiMap choi_of(const KrausSet &kraus) {
    if (kraus.terms.empty()) {
        throw Error(ErrorCode::BadParameter, "empty Kraus set");
    }
    const std::size_t n = kraus.terms.front().second.dim();
    CMat c(n * n);
    const double s = 1 / std::sqrt(static_cast<double>(n));
    for (const auto &[coef, k] : kraus.terms) {
        if (k.dim() != n) {
            throw Error(ErrorCode::DimMismatch, "Kraus operators of different shapes");
        }
        // (1 (x) K)|Psi+> = (1/sqrt n) sum_j |j> (x) K|j>.
        std::vector<cplx> v(n * n);
        for (std::size_t j = 0; j < n; j++) {
            for (std::size_t r = 0; r < n; r++) {
                v[j * n + r] = s * k(r, j);
            }
        }
        c += coef * CMat::outer(v);
    }
    return {std::move(c), n, n};
}

ChoiMap choi_of_diag(const SigmaDiagMap &map) {
    if (map.n < 1) {
        throw Error(ErrorCode::BadParameter, "n must be positive");
    }
    if (map.n > 2) {
        throw Error(ErrorCode::TooLarge, "choi_of_diag supports n <= 2");
    }
    if (map.coeffs.size() != words_for(map.n)) {
        throw Error(ErrorCode::LengthMismatch, "coefficient vector must have length 4^n");
    }
    const std::size_t d = std::size_t{1} << map.n;
    CMat c(d * d);
    for (std::size_t idx = 0; idx < map.coeffs.size(); idx++) {
        if (map.coeffs[idx] != 0) {
            c += map.coeffs[idx] * basis_vector(word_from_index(idx, map.n)).projector();
        }
    }
    return {std::move(c), d, d};
}

ChoiMap choi_of_coefficients(int n, const CMat &lambda) {
    if (n < 1 || n > 2) {
        throw Error(ErrorCode::TooLarge, "choi_of_coefficients supports n in {1, 2}");
    }
    if (lambda.dim() != words_for(n)) {
        throw Error(ErrorCode::DimMismatch, "coefficient matrix must be 4^n x 4^n");
    }
    const std::size_t d = std::size_t{1} << n;
    std::vector<std::vector<cplx>> psi;
    for (std::size_t idx = 0; idx < lambda.dim(); idx++) {
        psi.push_back(basis_vector(word_from_index(idx, n)).amplitudes());
    }
    CMat c(d * d);
    for (std::size_t mu = 0; mu < lambda.dim(); mu++) {
        for (std::size_t nu = 0; nu < lambda.dim(); nu++) {
            if (lambda(mu, nu) != cplx{}) {
                c += lambda(mu, nu) * CMat::outer(psi[mu], psi[nu]);
            }
        }
    }
    return {std::move(c), d, d};
}

CMat apply(const ChoiMap &map, const CMat &x) {
    const std::size_t n = map.in_dim;
    const std::size_t m = map.out_dim;
    if (x.dim() != n) {
        throw Error(ErrorCode::DimMismatch, "input dim does not match the map");
    }
    // Lambda[|i><j|] = n * block (i, j) of the Choi matrix.
    CMat out(m);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            cplx xij = x(i, j) * static_cast<double>(n);
            if (xij == cplx{}) {
                continue;
            }
            for (std::size_t k = 0; k < m; k++) {
                for (std::size_t l = 0; l < m; l++) {
                    out(k, l) += xij * map.choi(i * m + k, j * m + l);
                }
            }
        }
    }
    return out;
}

CMat extend_apply(const ChoiMap &map, const DensityMatrix &rho) {
    const std::size_t d1 = rho.dims().d1;
    const std::size_t n = map.in_dim;
    const std::size_t m = map.out_dim;
    if (rho.dims().d2 != n) {
        throw Error(ErrorCode::DimMismatch, "second party does not match the map input");
    }
    CMat out(d1 * m);
    CMat block(n);
    for (std::size_t a = 0; a < d1; a++) {
        for (std::size_t b = 0; b < d1; b++) {
            for (std::size_t i = 0; i < n; i++) {
                for (std::size_t j = 0; j < n; j++) {
                    block(i, j) = rho.mat()(a * n + i, b * n + j);
                }
            }
            CMat image = apply(map, block);
            for (std::size_t k = 0; k < m; k++) {
                for (std::size_t l = 0; l < m; l++) {
                    out(a * m + k, b * m + l) = image(k, l);
                }
            }
        }
    }
    return out;
}

CpTest is_completely_positive(const ChoiMap &map, double tol) {
    if (!map.choi.is_hermitian(tol)) {
        throw Error(ErrorCode::NotHermitian, "Choi matrix is not Hermitian");
    }
    double lo = min_eigenvalue(map.choi, tol);
    return {lo >= -tol, lo};
}

BlockPositivity block_positivity_seesaw(const ChoiMap &map, int restarts, std::uint64_t seed) {
    SeesawOptions options;
    options.restarts = restarts;
    options.seed = seed;
    options.stop_beyond = kBlockPositivityThreshold;
    auto best = optimize_product(map.choi, map.dims(), Extremum::Minimize, options);
    if (best.value < kBlockPositivityThreshold) {
        return CertifiedViolation{best.left, best.right, best.value};
    }
    return PresumedPositive{best.value};
}

StormerSplit stormer_cp_part(const SigmaDiagMap &map, double mu) {
    if (!(mu > 0)) {
        throw Error(ErrorCode::NonPositiveMu, "mu must be positive");
    }
    if (map.coeffs.size() != words_for(map.n)) {
        throw Error(ErrorCode::LengthMismatch, "coefficient vector must have length 4^n");
    }
    const double base = 1.0 / static_cast<double>(std::size_t{1} << map.n);
    StormerSplit out{{map.n, std::vector<double>(map.coeffs.size())}, true};
    for (std::size_t i = 0; i < map.coeffs.size(); i++) {
        out.cp_part.coeffs[i] = base - map.coeffs[i] / mu;
        if (out.cp_part.coeffs[i] < 0) {
            out.certified_cp = false;
        }
    }
    return out;
}

SigmaDiagMap diagonalize_map(const CMat &lambda) {
    int n = 0;
    while (words_for(n) < lambda.dim()) {
        n++;
    }
    if (n == 0 || words_for(n) != lambda.dim()) {
        throw Error(ErrorCode::DimMismatch, "coefficient matrix must be 4^n x 4^n");
    }
    SigmaDiagMap out{n, std::vector<double>(lambda.dim())};
    for (std::size_t i = 0; i < lambda.dim(); i++) {
        out.coeffs[i] = lambda(i, i).real();
    }
    return out;
}

namespace named {

ChoiMap trace_map(std::size_t d) {
    CMat c = CMat::identity(d * d);
    c *= 1.0 / static_cast<double>(d);
    return {std::move(c), d, d};
}

SigmaDiagMap trace_diag(int n) {
    if (n < 1 || n > 2) {
        throw Error(ErrorCode::TooLarge, "trace_diag supports n in {1, 2}");
    }
    return {n, std::vector<double>(words_for(n), 1.0 / static_cast<double>(std::size_t{1} << n))};
}

ChoiMap transposition_map(std::size_t d) {
    CMat c = flip(d);
    c *= 1.0 / static_cast<double>(d);
    return {std::move(c), d, d};
}

SigmaDiagMap transposition_diag(int n) {
    if (n < 1 || n > 2) {
        throw Error(ErrorCode::TooLarge, "transposition_diag supports n in {1, 2}");
    }
    SigmaDiagMap out{n, std::vector<double>(words_for(n))};
    const double base = 1.0 / static_cast<double>(std::size_t{1} << n);
    for (std::size_t idx = 0; idx < out.coeffs.size(); idx++) {
        double c = base;
        for (auto a : word_from_index(idx, n)) {
            c *= transpose_sign(a);
        }
        out.coeffs[idx] = c;
    }
    return out;
}

ChoiMap reduction_map(std::size_t d) {
    CMat c = CMat::identity(d * d);
    c *= 1.0 / static_cast<double>(d);
    c -= max_symmetric_vector(d).projector();
    return {std::move(c), d, d};
}

SigmaDiagMap gamma_t(double t) {
    if (!(t >= 0)) {
        throw Error(ErrorCode::BadParameter, "gamma_t needs t >= 0");
    }
    const double e = std::exp(-4 * t);
    SigmaDiagMap out{2, std::vector<double>(16)};
    out.coeffs[word_index({0, 0})] = (1 + 3 * e) / 4 * (3 + e) / 4;
    for (int i = 1; i < 4; i++) {
        out.coeffs[word_index({0, i})] = transpose_sign(i) * (1 + 3 * e) / 4 * (1 - e) / 4;
        out.coeffs[word_index({i, 0})] = (1 - e) / 4 * (3 + e) / 4;
    }
    return out;
}

namespace {

std::vector<std::pair<PauliWord, cplx>> phi_v_terms(const PhiVCoefficients &v) {
    const int others[3] = {0, 1, 3};
    std::vector<std::pair<PauliWord, cplx>> terms;
    double norm = 0;
    for (int i = 0; i < 3; i++) {
        terms.push_back({{others[i], 2}, v.alpha_2[i]});
        terms.push_back({{2, others[i]}, v.two_beta[i]});
        norm += std::norm(v.alpha_2[i]) + std::norm(v.two_beta[i]);
    }
    if (std::abs(norm - 1) > 1e-12) {
        throw Error(ErrorCode::BadParameter, "Phi_V coefficients must satisfy sum |v|^2 = 1");
    }
    return terms;
}

}  // namespace

CMat phi_v_coefficients(const PhiVCoefficients &v) {
    auto terms = phi_v_terms(v);
    const auto tr = trace_diag(2);
    const auto tp = transposition_diag(2);
    CMat lambda(16);
    for (std::size_t i = 0; i < 16; i++) {
        lambda(i, i) = tr.coeffs[i] - tp.coeffs[i];
    }
    for (const auto &[wm, vm] : terms) {
        for (const auto &[wn, vn] : terms) {
            lambda(word_index(wm), word_index(wn)) -= std::conj(vm) * vn;
        }
    }
    return lambda;
}

ChoiMap phi_v(const PhiVCoefficients &v) {
    auto terms = phi_v_terms(v);
    CMat vop(4);
    for (const auto &[w, c] : terms) {
        vop += c * word_matrix(w);
    }
    // Phi_V[X] = Tr[X] 1 - X^T - V^dagger X V.
    ChoiMap tr = trace_map(4);
    ChoiMap tp = transposition_map(4);
    ChoiMap conj = choi_of(KrausSet{{{1.0, vop.adjoint()}}});
    return {tr.choi - tp.choi - conj.choi, 4, 4};
}

SigmaDiagMap phi_v_diag(const PhiVCoefficients &v) {
    auto terms = phi_v_terms(v);
    SigmaDiagMap out{2, std::vector<double>(16)};
    for (const auto &[w, c] : terms) {
        out.coeffs[word_index(w)] = 0.5 - std::norm(c);
    }
    return out;
}

}  // namespace named

}  // namespace latwit
