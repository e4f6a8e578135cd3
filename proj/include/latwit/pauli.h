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
#include <string>
#include <vector>

#include "latwit/cmat.h"

namespace latwit {

/// Pauli label in {0,1,2,3}: identity, sigma_x, sigma_y, sigma_z.
using PauliIndex = int;
/// Tensor word sigma_{mu_1} (x) ... (x) sigma_{mu_n}.
using PauliWord = std::vector<PauliIndex>;

/// Point (alpha, beta) of the 4x4 lattice: alpha is the column, beta the row.
/// As a word it is sigma_alpha (x) sigma_beta.
struct LatticePoint {
    int alpha = 0;
    int beta = 0;
    bool operator==(const LatticePoint &) const = default;
    auto operator<=>(const LatticePoint &) const = default;
    /// Mask bit 4*beta + alpha.
    constexpr int bit() const noexcept {
        return 4 * beta + alpha;
    }
    static constexpr LatticePoint from_bit(int bit) {
        return {bit & 3, bit >> 2};
    }
    PauliWord word() const {
        return {alpha, beta};
    }
    std::string str() const;
};

struct PhaseTables {
    std::array<std::array<PauliIndex, 4>, 4> product_index;
    std::array<std::array<cplx, 4>, 4> product_phase;
    std::array<std::array<int, 4>, 4> commute_sign;
};

/// Hard-coded tables, checked against explicit 2x2 products on first use.
const PhaseTables &phase_tables();

struct PauliProduct {
    PauliIndex index;
    cplx phase;
};

/// sigma_a sigma_m = phase * sigma_index.
PauliProduct pauli_product(PauliIndex a, PauliIndex m);
/// [a, m] of the product table.
PauliIndex product_index(PauliIndex a, PauliIndex m);
/// +1 when sigma_a and sigma_g commute, -1 otherwise.
int commute_sign(PauliIndex a, PauliIndex g);
/// sigma_a^T = transpose_sign(a) * sigma_a: -1 for sigma_y, +1 otherwise.
int transpose_sign(PauliIndex a);
bool words_commute(const PauliWord &p, const PauliWord &q);

CMat pauli_matrix(PauliIndex a);
/// n <= 3.
CMat word_matrix(const PauliWord &p);

/// Position of a word in weight/coefficient vectors: base 4, first index most
/// significant (for n = 2 the point (alpha, beta) sits at 4*alpha + beta).
std::size_t word_index(const PauliWord &p);
PauliWord word_from_index(std::size_t index, int n);

/// tau_t(p) = ([t.alpha, p.alpha], [t.beta, p.beta]).
LatticePoint tau(LatticePoint t, LatticePoint p);

}  // namespace latwit
