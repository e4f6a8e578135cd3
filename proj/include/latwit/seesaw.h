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

// Alternating optimization of <x (x) y| H |x (x) y> over unit product vectors.

#include <cstdint>
#include <optional>
#include <vector>

#include "latwit/cmat.h"

namespace latwit {

enum class Extremum { Minimize, Maximize };

struct SeesawOptions {
    int restarts = 64;
    std::uint64_t seed = 0xC0FFEE;
    int max_iterations = 500;
    double tolerance = 1e-10;
    /// Stop early once a restart reaches a value beyond this bound (below it
    /// when minimizing, above it when maximizing).
    std::optional<double> stop_beyond;
};

struct ProductOptimum {
    double value = 0;
    std::vector<cplx> left;
    std::vector<cplx> right;
    /// Restart that produced the optimum and its sub-seed.
    int restart = -1;
    std::uint64_t sub_seed = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// <x (x) y| H |x (x) y>, real part.
double product_expectation(const CMat &h, BipartiteDims dims, const std::vector<cplx> &x,
                           const std::vector<cplx> &y);

/// Best value over all restarts; ties go to the lowest restart index.
/// Restart r draws its start from splitmix64(seed + r), so the result does not
/// depend on how restarts are scheduled.
ProductOptimum optimize_product(const CMat &h, BipartiteDims dims, Extremum goal, const SeesawOptions &options = {});

}  // namespace latwit
