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

// Named lattice patterns with published verdicts, and the checks run by
// `latwit verify-thesis`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latwit/lattice_subset.h"

namespace latwit {

struct NamedPattern {
    const char *name;
    std::uint16_t mask;
    const char *claim;
};

const std::vector<NamedPattern> &reference_patterns();
/// Throws BadParameter for unknown names.
LatticeSubset reference_subset(std::string_view name);

struct ReferenceCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<ReferenceCheck> run_reference_checks();

}  // namespace latwit
