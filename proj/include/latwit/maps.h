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

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "latwit/cmat.h"
#include "latwit/pauli.h"
#include "latwit/states.h"

namespace latwit {

/// Map M_n -> M_m stored as C = (id (x) Lambda)[P+] on C^n (x) C^m, with P+
/// the normalized projector (the identity map has Choi matrix P+).
struct ChoiMap {
    CMat choi;
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    BipartiteDims dims() const {
        return {in_dim, out_dim};
    }
};

/// Lambda = sum_mu lambda_mu S_mu with S_mu[X] = sigma_mu X sigma_mu on M_{2^n}.
/// Coefficients are indexed by word_index.
struct SigmaDiagMap {
    int n = 1;
    std::vector<double> coeffs;
    double operator[](const PauliWord &w) const {
        return coeffs[word_index(w)];
    }
};

/// Lambda[X] = sum_i c_i K_i X K_i^dagger; all operators square and the same size.
struct KrausSet {
    std::vector<std::pair<double, CMat>> terms;
};

ChoiMap choi_of(const KrausSet &kraus);
/// n <= 2; throws TooLarge otherwise.
ChoiMap choi_of_diag(const SigmaDiagMap &map);
/// Lambda[X] = sum_{mu,nu} lambda_{mu nu} sigma_mu X sigma_nu, Choi matrix
/// sum lambda_{mu nu} |Psi_mu><Psi_nu|.
ChoiMap choi_of_coefficients(int n, const CMat &lambda);

CMat apply(const ChoiMap &map, const CMat &x);
/// (id (x) Lambda)[rho]; the map acts on the second party.
CMat extend_apply(const ChoiMap &map, const DensityMatrix &rho);

struct CpTest {
    bool completely_positive = false;
    double min_eigenvalue = 0;
};
CpTest is_completely_positive(const ChoiMap &map, double tol = 1e-9);

/// Product vectors with <psi (x) phi|C|psi (x) phi> < -1e-9. Sound.
struct CertifiedViolation {
    std::vector<cplx> psi;
    std::vector<cplx> phi;
    double value = 0;
};
/// No violation found. Heuristic: the see-saw only reaches local optima.
struct PresumedPositive {
    double min_found = 0;
};
using BlockPositivity = std::variant<CertifiedViolation, PresumedPositive>;

constexpr double kBlockPositivityThreshold = -1e-9;
BlockPositivity block_positivity_seesaw(const ChoiMap &map, int restarts = 64, std::uint64_t seed = 0xC0FFEE);

struct StormerSplit {
    /// Coefficients of Lambda_cp with input = mu * (Tr - Lambda_cp).
    SigmaDiagMap cp_part;
    /// All coefficients of cp_part are >= 0.
    bool certified_cp = false;
};
StormerSplit stormer_cp_part(const SigmaDiagMap &map, double mu);

/// Keeps the diagonal of a 4^n x 4^n coefficient matrix.
SigmaDiagMap diagonalize_map(const CMat &lambda);

/// Named maps.
namespace named {
/// Tr[X] * 1 on M_d (Choi = 1 / d).
ChoiMap trace_map(std::size_t d);
/// All coefficients 1/2^n.
SigmaDiagMap trace_diag(int n);
/// Transposition on M_d.
ChoiMap transposition_map(std::size_t d);
/// Transposition on M_{2^n} for n in {1, 2}: coefficients prod_i eps_{mu_i} / 2^n.
SigmaDiagMap transposition_diag(int n);
/// Tr[X] * 1 - X on M_d.
ChoiMap reduction_map(std::size_t d);
/// Gamma^t on M_4, t >= 0.
SigmaDiagMap gamma_t(double t);

/// Coefficients v_mu of V = sum v_mu sigma_mu on the six words with exactly one
/// index equal to 2: (0,2), (1,2), (3,2), (2,0), (2,1), (2,3).
struct PhiVCoefficients {
    std::array<cplx, 3> alpha_2;  // v_{alpha 2}, alpha = 0, 1, 3
    std::array<cplx, 3> two_beta;  // v_{2 beta}, beta = 0, 1, 3
};
/// Phi_V[X] = Tr[X] 1 - X^T - V^dagger X V on M_4. Coefficients must satisfy
/// sum |v|^2 = 1 (BadParameter otherwise).
ChoiMap phi_v(const PhiVCoefficients &v);
/// Full 16 x 16 coefficient matrix of Phi_V.
CMat phi_v_coefficients(const PhiVCoefficients &v);
/// sum over the six words of (1/2 - |v_mu|^2) S_mu.
SigmaDiagMap phi_v_diag(const PhiVCoefficients &v);
}  // namespace named

}  // namespace latwit
