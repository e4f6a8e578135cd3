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

#include "latwit/lattice_subset.h"

namespace latwit {

LatticeSubset LatticeSubset::from_points(const std::vector<LatticePoint> &points) {
    std::uint16_t mask = 0;
    for (const auto &p : points) {
        mask = static_cast<std::uint16_t>(mask | (1u << p.bit()));
    }
    return LatticeSubset(mask);
}

std::vector<LatticePoint> LatticeSubset::points() const {
    std::vector<LatticePoint> out;
    for (int b = 0; b < 16; b++) {
        if ((mask_ >> b) & 1) {
            out.push_back(LatticePoint::from_bit(b));
        }
    }
    return out;
}

LatticeSubset LatticeSubset::translated(LatticePoint t) const {
    std::uint16_t mask = 0;
    for (const auto &p : points()) {
        mask = static_cast<std::uint16_t>(mask | (1u << tau(t, p).bit()));
    }
    return LatticeSubset(mask);
}

}  // namespace latwit
