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

#include <vector>

#include "latwit/cmat.h"
#include "latwit/lattice_subset.h"
#include "latwit/pauli.h"

namespace latwit {

class StateVector {
   public:
    /// Throws BadParameter unless the norm is 1 within 1e-12.
    explicit StateVector(std::vector<cplx> amplitudes);
    /// Scales to unit norm; throws BadParameter for the zero vector.
    static StateVector normalized(std::vector<cplx> amplitudes);

    std::size_t dim() const noexcept {
        return amps_.size();
    }
    const std::vector<cplx> &amplitudes() const noexcept {
        return amps_;
    }
    cplx operator[](std::size_t i) const {
        return amps_[i];
    }
    CMat projector() const {
        return CMat::outer(amps_);
    }

   private:
    std::vector<cplx> amps_;
};

class DensityMatrix {
   public:
    /// Validates: Hermitian within 1e-10, unit trace within 1e-10, minimum
    /// eigenvalue >= -1e-9. Throws BadParameter / DimMismatch.
    DensityMatrix(CMat mat, BipartiteDims dims);
    /// Skips validation; for constructions that are valid by design.
    static DensityMatrix trusted(CMat mat, BipartiteDims dims);

    const CMat &mat() const noexcept {
        return mat_;
    }
    BipartiteDims dims() const noexcept {
        return dims_;
    }

   private:
    DensityMatrix() = default;
    CMat mat_;
    BipartiteDims dims_;
};

struct SigmaDiagonalState {
    int n = 1;
    /// Indexed by word_index; length 4^n.
    std::vector<double> weights;
};

/// (1/sqrt d) sum_j |jj>.
StateVector max_symmetric_vector(std::size_t d);
/// |Psi_w> = (1 (x) sigma_w)|Psi+> on C^{2^n} (x) C^{2^n}.
StateVector basis_vector(const PauliWord &w);
DensityMatrix basis_projector(const PauliWord &w);
DensityMatrix sigma_diagonal_state(const SigmaDiagonalState &s);
/// (1/N_I) sum_{(alpha,beta) in I} P_{alpha beta}. Throws EmptySubset.
DensityMatrix lattice_state(LatticeSubset subset);

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
StateVector bell_state(BellKind kind);
/// alpha |Psi-><Psi-| + (1 - alpha)/4 * 1, for -1/3 <= alpha <= 1.
DensityMatrix werner_state(double alpha);

std::vector<StateVector> tiles_upb();
/// Normalized projector onto the orthogonal complement of `vectors`.
DensityMatrix upb_complement_state(const std::vector<StateVector> &vectors, BipartiteDims dims);
/// Vertical and horizontal tiles for even d >= 4.
std::vector<StateVector> even_d_upb(std::size_t d);
/// 0 < a < 1.
DensityMatrix horodecki_3x3(double a);
/// 0 <= b <= 1.
DensityMatrix horodecki_2x4(double b);

/// Natural log.
double von_neumann_entropy(const DensityMatrix &rho);

struct SchmidtDecomposition {
    /// Descending, length min(d1, d2).
    std::vector<double> coefficients;
    /// Only the `rank` terms with coefficient > 1e-10.
    std::vector<std::vector<cplx>> left;
    std::vector<std::vector<cplx>> right;
    std::size_t rank = 0;
};
SchmidtDecomposition schmidt(const StateVector &v, BipartiteDims dims);

}  // namespace latwit
