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

// Combinatorics of the 4x4 lattice: geometric PPT/entanglement criteria,
// special quadruples and uniform coverings.

#include <array>
#include <optional>
#include <vector>

#include "latwit/lattice_subset.h"
#include "latwit/pauli.h"

namespace latwit {

/// Number of points of I on column alpha and row beta, excluding (alpha, beta).
int cross_count(LatticeSubset subset, LatticePoint center);

/// For every point, cross_count <= N_I / 2. Throws EmptySubset.
bool ppt_combinatorial(LatticeSubset subset);

/// A point outside I whose cross count is exactly 1 (first in bit order).
/// Throws NotPpt when the subset fails ppt_combinatorial.
std::optional<LatticePoint> entangled_one_point(LatticeSubset subset);

/// How the k quantity picks the excluded cells.
enum class KReading {
    /// Row nu+2 and column mu+2 both exclude their crossing (mu+2, nu+2).
    Corrected,
    /// Row nu+2 excludes column nu+2 and column mu+2 excludes row mu+2, as the
    /// index ranges are printed. Unsound; kept to document the discrepancy.
    Literal,
};

struct KHit {
    int mu = 0;
    int nu = 0;
    LatticePoint center;  // (mu+2, nu+2) mod 4
    int k = 0;
};

int k_value(LatticeSubset subset, int mu, int nu, KReading reading = KReading::Corrected);
/// First (mu, nu) in row-major order with k = 1. Throws NotPpt.
std::optional<KHit> k_criterion(LatticeSubset subset, KReading reading = KReading::Corrected);

/// Four distinct points sorted by bit.
struct Quadruple {
    std::array<LatticePoint, 4> points;
    std::uint16_t mask() const;
    LatticeSubset subset() const {
        return LatticeSubset(mask());
    }
    bool contains(LatticePoint p) const;
    static Quadruple from_mask(std::uint16_t mask);
    bool operator==(const Quadruple &) const = default;
};

/// The 15 special quadruples through (0,0).
const std::vector<Quadruple> &quadruples_q00();
/// All 60 special quadruples, sorted by mask.
const std::vector<Quadruple> &all_quadruples();
/// tau_{q0}[Q] lies in Q00, where q0 is any point of Q. Throws BadParameter
/// unless the four points are distinct.
bool is_special(const std::array<LatticePoint, 4> &points);

/// Points p of I such that no special quadruple through p lies inside I.
std::vector<LatticePoint> special_points(LatticeSubset subset);
/// First special point in bit order. Throws EmptySubset.
std::optional<LatticePoint> special_subset_point(LatticeSubset subset);

struct CoveringTerm {
    Quadruple quadruple;
    int weight = 0;
};

struct Covering {
    std::vector<CoveringTerm> terms;
    /// Common multiplicity M of every point of I.
    int multiplicity = 0;
    /// N_Q: total weight.
    int total_weight() const;
    /// Per-point multiplicities, indexed by mask bit.
    std::array<int, 16> point_multiplicities() const;
    /// Every quadruple is special and inside I, every point of I has
    /// multiplicity M, and 4 * N_Q = M * N_I.
    bool is_uniform_for(LatticeSubset subset) const;
};

/// Minimal-M integer uniform covering with M <= max_multiplicity, or none.
std::optional<Covering> uniform_covering(LatticeSubset subset, int max_multiplicity = 12);

struct SeparabilityCertificate {
    /// rho_I = sum_j weight_j rho_{Q_j}.
    std::vector<std::pair<double, Quadruple>> parts;
    double reconstruction_error = 0;
    double min_pt_eigenvalue = 0;
};
/// Verifies the convex decomposition numerically (error < 1e-12, every rho_Q
/// PPT). Throws BadCovering otherwise.
SeparabilityCertificate separability_certificate(LatticeSubset subset, const Covering &covering);

}  // namespace latwit
