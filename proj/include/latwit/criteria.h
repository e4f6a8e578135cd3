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

#include <cstdint>
#include <string>

#include "latwit/cmat.h"
#include "latwit/lattice_subset.h"
#include "latwit/maps.h"
#include "latwit/states.h"

namespace latwit {

struct CriterionVerdict {
    std::string name;
    bool detected = false;
    /// Minimum eigenvalue, trace norm or witness value, per criterion.
    double evidence = 0;
};

/// Detected when the smallest eigenvalue of rho^{T_2} is below -tol.
CriterionVerdict ppt_check(const DensityMatrix &rho, double tol = 1e-9);
/// Detected when the trace norm of the reshuffled matrix exceeds 1 + 1e-9.
/// Throws NonSquareParties unless d1 == d2.
CriterionVerdict realignment_check(const DensityMatrix &rho);
/// Detected when 1 (x) rho_2 - rho or rho_1 (x) 1 - rho has an eigenvalue
/// below -1e-9; evidence is the smaller of the two minima.
CriterionVerdict reduction_check(const DensityMatrix &rho);

enum class WitnessKind { DiagonalLattice, EdgeState, Custom };

struct Witness {
    CMat mat;
    BipartiteDims dims;
    WitnessKind kind = WitnessKind::Custom;
    /// DiagonalLattice only.
    LatticePoint point;
    double delta = 0;
    /// Positive multiple with unit trace.
    Witness normalized() const;
};

/// Tr(W rho). Throws DimMismatch.
double witness_value(const Witness &w, const DensityMatrix &rho);

/// Choi matrix of (1/4) sum_{mu not in I} S_mu - (delta/4) S_p.
/// Throws PointNotInSubset, BadParameter for delta <= 0.
Witness diagonal_lattice_witness(LatticeSubset subset, LatticePoint p, double delta);

struct MaxDeltaOptions {
    std::uint64_t seed = 0xC0FFEE;
    int restarts = 64;
    double resolution = 1e-4;
};
/// Largest delta in (0, 4] at which the see-saw finds no product vectors with
/// Delta_{I,delta} > 1 + 1e-9; 0 when even the smallest step is violated.
/// Heuristic upper bound on the true value.
double max_delta(LatticeSubset subset, LatticePoint p, const MaxDeltaOptions &options = {});
double max_delta(LatticeSubset subset, LatticePoint p, std::uint64_t seed);

struct EdgeWitness {
    Witness witness;
    double a = 0;
    double epsilon = 0;
    std::size_t kernel_rank = 0;
    std::size_t pt_kernel_rank = 0;
};
/// a (P + Q^{T_2}) - epsilon 1 from the kernels of delta and delta^{T_2}.
/// Throws NotPpt, ZeroKernels.
EdgeWitness edge_witness(const DensityMatrix &delta_state, std::uint64_t seed = 0xC0FFEE);

}  // namespace latwit
