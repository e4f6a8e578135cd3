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

#include "latwit/lattice.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "latwit/error.h"
#include "latwit/linalg.h"
#include "latwit/states.h"

namespace latwit {
namespace {

void require_nonempty(LatticeSubset subset) {
    if (subset.empty()) {
        throw Error(ErrorCode::EmptySubset, "empty lattice subset");
    }
}

void require_ppt(LatticeSubset subset) {
    if (!ppt_combinatorial(subset)) {
        throw Error(ErrorCode::NotPpt, "criterion applies to PPT lattice states only");
    }
}

std::uint16_t bit_of(LatticePoint p) {
    return static_cast<std::uint16_t>(1u << p.bit());
}

std::vector<Quadruple> build_q00() {
    // (0,0) plus the three listed points of each quadruple.
    const int table[15][3][2] = {
        {{0, 1}, {1, 0}, {1, 1}}, {{0, 2}, {2, 0}, {2, 2}}, {{0, 3}, {3, 0}, {3, 3}},
        {{0, 1}, {2, 1}, {2, 0}}, {{0, 2}, {1, 2}, {1, 0}}, {{0, 3}, {1, 3}, {1, 0}},
        {{0, 1}, {3, 1}, {3, 0}}, {{0, 2}, {3, 2}, {3, 0}}, {{0, 3}, {2, 3}, {2, 0}},
        {{1, 1}, {2, 2}, {3, 3}}, {{1, 2}, {2, 3}, {3, 1}}, {{1, 1}, {2, 3}, {3, 2}},
        {{1, 3}, {2, 2}, {3, 1}}, {{1, 2}, {2, 1}, {3, 3}}, {{1, 3}, {2, 1}, {3, 2}},
    };
    std::vector<Quadruple> out;
    for (const auto &row : table) {
        std::uint16_t mask = 1;
        for (const auto &pt : row) {
            mask = static_cast<std::uint16_t>(mask | bit_of({pt[0], pt[1]}));
        }
        out.push_back(Quadruple::from_mask(mask));
    }
    return out;
}

std::vector<Quadruple> build_all() {
    std::set<std::uint16_t> masks;
    for (const auto &q : quadruples_q00()) {
        for (int b = 0; b < 16; b++) {
            masks.insert(q.subset().translated(LatticePoint::from_bit(b)).mask());
        }
    }
    std::vector<Quadruple> out;
    for (auto m : masks) {
        out.push_back(Quadruple::from_mask(m));
    }
    return out;
}

bool in_q00(std::uint16_t mask) {
    for (const auto &q : quadruples_q00()) {
        if (q.mask() == mask) {
            return true;
        }
    }
    return false;
}

// Depth-first search for integer weights with every point multiplicity M.
class CoveringSearch {
   public:
    CoveringSearch(LatticeSubset subset, int multiplicity) {
        for (const auto &q : all_quadruples()) {
            if ((q.mask() & ~subset.mask()) == 0) {
                quads_.push_back(q.mask());
            }
        }
        weights_.assign(quads_.size(), 0);
        residual_.fill(0);
        for (const auto &p : subset.points()) {
            residual_[static_cast<std::size_t>(p.bit())] = multiplicity;
        }
        for (std::size_t i = 0; i < quads_.size(); i++) {
            available_ |= std::uint64_t{1} << i;
            for (int b = 0; b < 16; b++) {
                if ((quads_[i] >> b) & 1) {
                    through_[static_cast<std::size_t>(b)].push_back(i);
                }
            }
        }
    }

    bool run() {
        return descend();
    }

    std::vector<CoveringTerm> terms() const {
        std::vector<CoveringTerm> out;
        for (std::size_t i = 0; i < quads_.size(); i++) {
            if (weights_[i] > 0) {
                out.push_back({Quadruple::from_mask(quads_[i]), weights_[i]});
            }
        }
        return out;
    }

   private:
    int capacity(std::size_t q) const {
        int cap = std::numeric_limits<int>::max();
        for (int b = 0; b < 16; b++) {
            if ((quads_[q] >> b) & 1) {
                cap = std::min(cap, residual_[static_cast<std::size_t>(b)]);
            }
        }
        return cap;
    }

    void add(std::size_t q, int w) {
        weights_[q] += w;
        for (int b = 0; b < 16; b++) {
            if ((quads_[q] >> b) & 1) {
                residual_[static_cast<std::size_t>(b)] -= w;
            }
        }
    }

    bool descend() {
        // Most constrained unsaturated point; also prune on reachability.
        int best = -1;
        std::size_t best_count = 0;
        for (int b = 0; b < 16; b++) {
            int need = residual_[static_cast<std::size_t>(b)];
            if (need == 0) {
                continue;
            }
            std::size_t count = 0;
            int reach = 0;
            for (auto q : through_[static_cast<std::size_t>(b)]) {
                if ((available_ >> q) & 1) {
                    count++;
                    reach += capacity(q);
                }
            }
            if (reach < need) {
                return false;
            }
            if (best < 0 || count < best_count) {
                best = b;
                best_count = count;
            }
        }
        if (best < 0) {
            return true;
        }
        std::vector<std::size_t> candidates;
        for (auto q : through_[static_cast<std::size_t>(best)]) {
            if ((available_ >> q) & 1) {
                candidates.push_back(q);
            }
        }
        // The chosen point is saturated by this step, so its quadruples retire.
        std::uint64_t saved = available_;
        for (auto q : candidates) {
            available_ &= ~(std::uint64_t{1} << q);
        }
        bool ok = distribute(candidates, 0, residual_[static_cast<std::size_t>(best)]);
        if (!ok) {
            available_ = saved;
        }
        return ok;
    }

    bool distribute(const std::vector<std::size_t> &candidates, std::size_t i, int remaining) {
        if (remaining == 0) {
            return descend();
        }
        if (i == candidates.size()) {
            return false;
        }
        std::size_t q = candidates[i];
        int cap = std::min(capacity(q), remaining);
        int low = i + 1 == candidates.size() ? remaining : 0;
        for (int w = cap; w >= low; w--) {
            add(q, w);
            if (distribute(candidates, i + 1, remaining - w)) {
                return true;
            }
            add(q, -w);
        }
        return false;
    }

    std::vector<std::uint16_t> quads_;
    std::vector<int> weights_;
    std::array<int, 16> residual_{};
    std::array<std::vector<std::size_t>, 16> through_;
    std::uint64_t available_ = 0;
};

}  // namespace

int cross_count(LatticeSubset subset, LatticePoint c) {
    int n = 0;
    for (int d = 0; d < 4; d++) {
        if (d != c.beta) {
            n += subset.chi(c.alpha, d);
        }
        if (d != c.alpha) {
            n += subset.chi(d, c.beta);
        }
    }
    return n;
}

bool ppt_combinatorial(LatticeSubset subset) {
    require_nonempty(subset);
    for (int b = 0; b < 16; b++) {
        if (2 * cross_count(subset, LatticePoint::from_bit(b)) > subset.size()) {
            return false;
        }
    }
    return true;
}

std::optional<LatticePoint> entangled_one_point(LatticeSubset subset) {
    require_ppt(subset);
    for (int b = 0; b < 16; b++) {
        auto p = LatticePoint::from_bit(b);
        if (!subset.contains(p) && cross_count(subset, p) == 1) {
            return p;
        }
    }
    return std::nullopt;
}

int k_value(LatticeSubset subset, int mu, int nu, KReading reading) {
    if (mu < 0 || mu > 3 || nu < 0 || nu > 3) {
        throw Error(ErrorCode::OutOfRange, "k index out of range");
    }
    const int row = (nu + 2) % 4;
    const int col = (mu + 2) % 4;
    const int row_skip = reading == KReading::Corrected ? col : row;
    const int col_skip = reading == KReading::Corrected ? row : col;
    int k = 0;
    for (int a = 0; a < 4; a++) {
        if (a != row_skip) {
            k += subset.chi(a, row);
        }
    }
    for (int b = 0; b < 4; b++) {
        if (b != col_skip) {
            k += subset.chi(col, b);
        }
    }
    return k;
}

std::optional<KHit> k_criterion(LatticeSubset subset, KReading reading) {
    require_ppt(subset);
    for (int mu = 0; mu < 4; mu++) {
        for (int nu = 0; nu < 4; nu++) {
            int k = k_value(subset, mu, nu, reading);
            if (k == 1) {
                return KHit{mu, nu, {(mu + 2) % 4, (nu + 2) % 4}, k};
            }
        }
    }
    return std::nullopt;
}

std::uint16_t Quadruple::mask() const {
    std::uint16_t m = 0;
    for (const auto &p : points) {
        m = static_cast<std::uint16_t>(m | bit_of(p));
    }
    return m;
}

bool Quadruple::contains(LatticePoint p) const {
    return std::find(points.begin(), points.end(), p) != points.end();
}

Quadruple Quadruple::from_mask(std::uint16_t mask) {
    if (std::popcount(mask) != 4) {
        throw Error(ErrorCode::BadParameter, "a quadruple needs exactly four points");
    }
    Quadruple q;
    std::size_t i = 0;
    for (int b = 0; b < 16; b++) {
        if ((mask >> b) & 1) {
            q.points[i++] = LatticePoint::from_bit(b);
        }
    }
    return q;
}

const std::vector<Quadruple> &quadruples_q00() {
    static const std::vector<Quadruple> q = build_q00();
    return q;
}

const std::vector<Quadruple> &all_quadruples() {
    static const std::vector<Quadruple> q = build_all();
    return q;
}

bool is_special(const std::array<LatticePoint, 4> &points) {
    std::uint16_t mask = 0;
    for (const auto &p : points) {
        if (p.alpha < 0 || p.alpha > 3 || p.beta < 0 || p.beta > 3) {
            throw Error(ErrorCode::OutOfRange, "lattice point out of range");
        }
        mask = static_cast<std::uint16_t>(mask | bit_of(p));
    }
    if (std::popcount(mask) != 4) {
        throw Error(ErrorCode::BadParameter, "a quadruple needs four distinct points");
    }
    return in_q00(LatticeSubset(mask).translated(points[0]).mask());
}

std::vector<LatticePoint> special_points(LatticeSubset subset) {
    std::vector<LatticePoint> out;
    for (const auto &p : subset.points()) {
        bool covered = false;
        for (const auto &q : all_quadruples()) {
            if (q.contains(p) && (q.mask() & ~subset.mask()) == 0) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            out.push_back(p);
        }
    }
    return out;
}

std::optional<LatticePoint> special_subset_point(LatticeSubset subset) {
    require_nonempty(subset);
    auto pts = special_points(subset);
    if (pts.empty()) {
        return std::nullopt;
    }
    return pts.front();
}

int Covering::total_weight() const {
    int n = 0;
    for (const auto &t : terms) {
        n += t.weight;
    }
    return n;
}

std::array<int, 16> Covering::point_multiplicities() const {
    std::array<int, 16> m{};
    for (const auto &t : terms) {
        for (const auto &p : t.quadruple.points) {
            m[static_cast<std::size_t>(p.bit())] += t.weight;
        }
    }
    return m;
}

bool Covering::is_uniform_for(LatticeSubset subset) const {
    if (multiplicity <= 0 || terms.empty()) {
        return false;
    }
    for (const auto &t : terms) {
        if (t.weight <= 0 || (t.quadruple.mask() & ~subset.mask()) != 0 || !is_special(t.quadruple.points)) {
            return false;
        }
    }
    auto mult = point_multiplicities();
    for (int b = 0; b < 16; b++) {
        int expected = subset.contains(LatticePoint::from_bit(b)) ? multiplicity : 0;
        if (mult[static_cast<std::size_t>(b)] != expected) {
            return false;
        }
    }
    return 4 * total_weight() == multiplicity * subset.size();
}

std::optional<Covering> uniform_covering(LatticeSubset subset, int max_multiplicity) {
    const int n = subset.size();
    if (n < 4) {
        return std::nullopt;
    }
    if (!special_points(subset).empty()) {
        return std::nullopt;
    }
    for (int m = 1; m <= max_multiplicity; m++) {
        if ((m * n) % 4 != 0) {
            continue;
        }
        CoveringSearch search(subset, m);
        if (search.run()) {
            return Covering{search.terms(), m};
        }
    }
    return std::nullopt;
}

SeparabilityCertificate separability_certificate(LatticeSubset subset, const Covering &covering) {
    if (!covering.is_uniform_for(subset)) {
        throw Error(ErrorCode::BadCovering, "covering is not uniform for the subset");
    }
    SeparabilityCertificate cert;
    cert.min_pt_eigenvalue = std::numeric_limits<double>::infinity();
    const double total = covering.total_weight();
    CMat sum(16);
    for (const auto &t : covering.terms) {
        double w = t.weight / total;
        CMat rq = lattice_state(t.quadruple.subset()).mat();
        cert.min_pt_eigenvalue = std::min(cert.min_pt_eigenvalue, min_eigenvalue(partial_transpose(rq, {4, 4}, 2)));
        sum += w * rq;
        cert.parts.push_back({w, t.quadruple});
    }
    cert.reconstruction_error = sum.max_abs_diff(lattice_state(subset).mat());
    if (cert.reconstruction_error >= 1e-12) {
        throw Error(ErrorCode::BadCovering, "decomposition does not reproduce the lattice state");
    }
    if (cert.min_pt_eigenvalue < -1e-9) {
        throw Error(ErrorCode::BadCovering, "a quadruple state is not PPT");
    }
    return cert;
}

}  // namespace latwit
