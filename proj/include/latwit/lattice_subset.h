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

#include <bit>
#include <cstdint>
#include <vector>

#include "latwit/pauli.h"

namespace latwit {

/// Subset I of the 4x4 lattice. Bit 4*beta + alpha of the mask is set when
/// (alpha, beta) belongs to I.
class LatticeSubset {
   public:
    constexpr LatticeSubset() = default;
    constexpr explicit LatticeSubset(std::uint16_t mask) : mask_(mask) {
    }
    static LatticeSubset from_points(const std::vector<LatticePoint> &points);
    static constexpr LatticeSubset full() {
        return LatticeSubset(0xFFFF);
    }

    constexpr std::uint16_t mask() const noexcept {
        return mask_;
    }
    constexpr int size() const noexcept {
        return std::popcount(mask_);
    }
    constexpr bool empty() const noexcept {
        return mask_ == 0;
    }
    constexpr bool contains(LatticePoint p) const noexcept {
        return ((mask_ >> p.bit()) & 1) != 0;
    }
    /// chi_I(alpha, beta).
    constexpr int chi(int alpha, int beta) const noexcept {
        return (mask_ >> (4 * beta + alpha)) & 1;
    }
    /// Points in increasing bit order.
    std::vector<LatticePoint> points() const;
    /// tau_t applied to every point.
    LatticeSubset translated(LatticePoint t) const;
    LatticeSubset complement() const {
        return LatticeSubset(static_cast<std::uint16_t>(~mask_));
    }

    constexpr bool operator==(const LatticeSubset &) const = default;

   private:
    std::uint16_t mask_ = 0;
};

}  // namespace latwit
