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

#include "latwit/criteria.h"

#include <algorithm>
#include <cmath>

#include "latwit/error.h"
#include "latwit/linalg.h"
#include "latwit/seesaw.h"

namespace latwit {
namespace {

constexpr double kViolation = 1 + 1e-9;

CMat kernel_projector(const CMat &m, std::size_t &rank) {
    auto eig = hermitian_eig(m, 1e-9);
    CMat p(m.dim());
    rank = 0;
    for (std::size_t j = 0; j < eig.values.size(); j++) {
        if (eig.values[j] < 1e-9) {
            p += CMat::outer(eig.vector(j));
            rank++;
        }
    }
    return p;
}

}  // namespace

CriterionVerdict ppt_check(const DensityMatrix &rho, double tol) {
    double lo = min_eigenvalue(partial_transpose(rho.mat(), rho.dims(), 2), 1e-9);
    return {"ppt", lo < -tol, lo};
}

CriterionVerdict realignment_check(const DensityMatrix &rho) {
    if (rho.dims().d1 != rho.dims().d2) {
        throw Error(ErrorCode::NonSquareParties, "realignment is implemented for d1 == d2");
    }
    double norm = trace_norm(reshuffle(rho.mat(), rho.dims()));
    return {"realignment", norm > 1 + 1e-9, norm};
}

CriterionVerdict reduction_check(const DensityMatrix &rho) {
    const auto dims = rho.dims();
    const CMat &m = rho.mat();
    CMat left = tensor(CMat::identity(dims.d1), partial_trace(m, dims, 1)) - m;
    CMat right = tensor(partial_trace(m, dims, 2), CMat::identity(dims.d2)) - m;
    double lo = std::min(min_eigenvalue(left), min_eigenvalue(right));
    return {"reduction", lo < -1e-9, lo};
}

Witness Witness::normalized() const {
    double tr = mat.trace().real();
    if (!(tr > 0)) {
        throw Error(ErrorCode::BadParameter, "witness trace is not positive");
    }
    Witness w = *this;
    w.mat *= 1 / tr;
    return w;
}

double witness_value(const Witness &w, const DensityMatrix &rho) {
    if (w.mat.dim() != rho.mat().dim()) {
        throw Error(ErrorCode::DimMismatch, "witness and state dims differ");
    }
    // W Hermitian, so Tr(W rho) = Tr(W^dagger rho).
    return hs_inner(w.mat, rho.mat()).real();
}

Witness diagonal_lattice_witness(LatticeSubset subset, LatticePoint p, double delta) {
    if (!subset.contains(p)) {
        throw Error(ErrorCode::PointNotInSubset, "point " + p.str() + " is not in the subset");
    }
    if (!(delta > 0)) {
        throw Error(ErrorCode::BadParameter, "delta must be positive");
    }
    SigmaDiagMap lambda{2, std::vector<double>(16)};
    for (int b = 0; b < 16; b++) {
        auto q = LatticePoint::from_bit(b);
        if (!subset.contains(q)) {
            lambda.coeffs[word_index(q.word())] = 0.25;
        }
    }
    lambda.coeffs[word_index(p.word())] = -delta / 4;
    Witness w{choi_of_diag(lambda).choi, {4, 4}, WitnessKind::DiagonalLattice, p, delta};
    return w;
}

double max_delta(LatticeSubset subset, LatticePoint p, std::uint64_t seed) {
    MaxDeltaOptions options;
    options.seed = seed;
    return max_delta(subset, p, options);
}

double max_delta(LatticeSubset subset, LatticePoint p, const MaxDeltaOptions &options) {
    if (!subset.contains(p)) {
        throw Error(ErrorCode::PointNotInSubset, "point " + p.str() + " is not in the subset");
    }
    // Delta_{I,delta}(psi, phi) = 4 <x (x) y| A + delta B |x (x) y> with A, B the
    // Choi matrices of (1/4) sum_I S and (1/4) S_p.
    SigmaDiagMap a_map{2, std::vector<double>(16)};
    for (const auto &q : subset.points()) {
        a_map.coeffs[word_index(q.word())] = 0.25;
    }
    SigmaDiagMap b_map{2, std::vector<double>(16)};
    b_map.coeffs[word_index(p.word())] = 0.25;
    const CMat a = choi_of_diag(a_map).choi;
    const CMat b = choi_of_diag(b_map).choi;
    const BipartiteDims dims{4, 4};

    std::vector<std::pair<std::vector<cplx>, std::vector<cplx>>> violators;
    auto violated = [&](double delta) {
        CMat h = a + delta * b;
        for (const auto &[x, y] : violators) {
            if (4 * product_expectation(h, dims, x, y) > kViolation) {
                return true;
            }
        }
        SeesawOptions so;
        so.restarts = options.restarts;
        so.seed = options.seed;
        so.stop_beyond = kViolation / 4;
        auto best = optimize_product(h, dims, Extremum::Maximize, so);
        if (4 * best.value > kViolation) {
            violators.emplace_back(best.left, best.right);
            return true;
        }
        return false;
    };

    double hi = 4;
    if (!violated(hi)) {
        return hi;
    }
    double lo = 0;
    if (violated(options.resolution)) {
        return 0;
    }
    lo = options.resolution;
    while (hi - lo > options.resolution) {
        double mid = 0.5 * (lo + hi);
        if (violated(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return lo;
}

EdgeWitness edge_witness(const DensityMatrix &delta_state, std::uint64_t seed) {
    if (ppt_check(delta_state).detected) {
        throw Error(ErrorCode::NotPpt, "edge witness needs a PPT state");
    }
    const auto dims = delta_state.dims();
    EdgeWitness out;
    CMat p = kernel_projector(delta_state.mat(), out.kernel_rank);
    CMat q = kernel_projector(partial_transpose(delta_state.mat(), dims, 2), out.pt_kernel_rank);
    if (out.kernel_rank + out.pt_kernel_rank == 0) {
        throw Error(ErrorCode::ZeroKernels, "state and its partial transpose have full rank");
    }
    out.a = 1.0 / static_cast<double>(out.kernel_rank + out.pt_kernel_rank);
    CMat w_delta = out.a * (p + partial_transpose(q, dims, 2));
    SeesawOptions so;
    so.seed = seed;
    out.epsilon = optimize_product(w_delta, dims, Extremum::Minimize, so).value;
    CMat w = w_delta - out.epsilon * CMat::identity(dims.total());
    out.witness = Witness{std::move(w), dims, WitnessKind::EdgeState, {}, 0};
    return out;
}

}  // namespace latwit
