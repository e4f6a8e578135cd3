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

namespace latwit {

struct EigenDecomposition {
    /// Descending.
    std::vector<double> values;
    /// Column j is the eigenvector for values[j].
    CMat vectors;
    std::vector<cplx> vector(std::size_t j) const;
};

/// Cyclic Jacobi. Throws NotHermitian when max|M - M^dagger| > tol and
/// NoConvergence after 100 sweeps.
EigenDecomposition hermitian_eig(const CMat &m, double tol = 1e-9);
/// Same rotations as hermitian_eig without accumulating eigenvectors.
std::vector<double> hermitian_eigvals(const CMat &m, double tol = 1e-9);
double min_eigenvalue(const CMat &m, double tol = 1e-9);

/// Descending; square roots of the eigenvalues of M^dagger M.
std::vector<double> singular_values(const CMat &m);
double trace_norm(const CMat &m);
/// Tr(A^dagger B).
cplx hs_inner(const CMat &a, const CMat &b);
CMat tensor(const CMat &a, const CMat &b);
std::vector<cplx> tensor(const std::vector<cplx> &a, const std::vector<cplx> &b);

/// Traces out party `which` (1 or 2).
CMat partial_trace(const CMat &m, BipartiteDims dims, int which);
/// Transposes party `which` (1 or 2).
CMat partial_transpose(const CMat &m, BipartiteDims dims, int which);
/// X^R_{(m,mu),(n,nu)} = X_{(nu,mu),(n,m)}; requires d1 == d2.
CMat reshuffle(const CMat &m, BipartiteDims dims);

}  // namespace latwit
