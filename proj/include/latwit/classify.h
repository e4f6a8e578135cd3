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
#include <optional>
#include <string>
#include <vector>

#include "latwit/lattice.h"

namespace latwit {

enum class Tag { Separable, NptEntangled, PptEntangled, Unknown };
const char *tag_name(Tag tag);

struct Classification {
    LatticeSubset subset;
    Tag tag = Tag::Unknown;
    bool ppt = false;
    /// Numeric minimum eigenvalue of rho_I^{T_2}; always set for NPT subsets.
    std::optional<double> pt_min_eigenvalue;
    /// Every criterion that fired, whatever the tag.
    std::optional<LatticePoint> special_point;
    std::optional<LatticePoint> one_point;
    std::optional<KHit> k_hit;
    std::optional<Covering> covering;
    /// From max_delta at special_point, when requested.
    std::optional<double> witness_delta;
    /// Name of the criterion that decided the tag.
    std::string criterion;
};

struct ClassifyOptions {
    bool witness = false;
    std::uint64_t seed = 0xC0FFEE;
    int max_multiplicity = 12;
    /// Compute the numeric PT minimum for PPT subsets too.
    bool numeric_pt = false;
};

/// Precedence: NPT, then special point / one-point / k criterion, then a
/// uniform covering, else Unknown. Throws EmptySubset.
Classification classify(LatticeSubset subset, const ClassifyOptions &options = {});

/// Numeric minimum eigenvalue of the partial transpose of rho_I.
double numeric_pt_min(LatticeSubset subset);

struct SurveyOptions {
    int workers = 1;
    bool cross_validate = false;
    int max_multiplicity = 12;
    std::uint64_t seed = 0xC0FFEE;
};

struct SurveyRow {
    Classification classification;
    /// Set with cross_validate: numeric PT PSD (tol 1e-9) agrees with ppt.
    std::optional<bool> numeric_agrees;
};

/// All 65,535 nonempty subsets in mask order. Output does not depend on the
/// worker count.
std::vector<SurveyRow> survey_all(const SurveyOptions &options = {});

}  // namespace latwit
