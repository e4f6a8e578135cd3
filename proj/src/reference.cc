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

#include "latwit/reference.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "latwit/classify.h"
#include "latwit/criteria.h"
#include "latwit/error.h"
#include "latwit/lattice.h"
#include "latwit/linalg.h"
#include "latwit/states.h"

namespace latwit {
namespace {

std::string fmt(const char *format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

bool has_point(const std::vector<LatticePoint> &pts, LatticePoint p) {
    return std::find(pts.begin(), pts.end(), p) != pts.end();
}

ReferenceCheck special_check(const char *name, LatticePoint expected) {
    auto s = reference_subset(name);
    auto pts = special_points(s);
    std::string found;
    for (const auto &p : pts) {
        found += p.str();
    }
    return {std::string(name) + " special point " + expected.str(), has_point(pts, expected),
            "special points: " + (found.empty() ? std::string("none") : found)};
}

}  // namespace

const std::vector<NamedPattern> &reference_patterns() {
    static const std::vector<NamedPattern> patterns = {
        {"npt-5", 0x4948, "NPT (a cross holds 4 > 5/2 points)"},
        {"npt-4", 0x4241, "NPT"},
        {"one-point-6", 0xC9A0, "PPT, one-point criterion at (0,0)"},
        {"one-point-8", 0xEDC0, "PPT, one-point criterion at (0,0)"},
        {"k-10", 0x96BB, "PPT, one-point silent, k criterion with k^00 = 1"},
        {"k-11", 0x7F78, "PPT, detected by the k criterion"},
        {"cover-10", 0xEEE1, "separable, uniform covering with 5 quadruples, M = 2"},
        {"cover-8", 0xEAA1, "separable, 4 quadruples, M = 2"},
        {"cover-9", 0xEAE1, "separable, 9 quadruples"},
        {"special-8", 0xC68D, "special subset at (0,0)"},
        {"special-10", 0xF587, "special subset at (3,3)"},
        {"special-11", 0xE1EF, "special subset at (0,0)"},
        {"npt-11", 0xE8EF, "NPT"},
        {"open-11", 0x9B77, "reported undecided"},
        {"npt-10", 0x99CF, "NPT"},
    };
    return patterns;
}

LatticeSubset reference_subset(std::string_view name) {
    for (const auto &p : reference_patterns()) {
        if (name == p.name) {
            return LatticeSubset(p.mask);
        }
    }
    throw Error(ErrorCode::BadParameter, "unknown reference pattern '" + std::string(name) + "'");
}

std::vector<ReferenceCheck> run_reference_checks() {
    std::vector<ReferenceCheck> out;

    {
        double worst = 0;
        bool boundary = true;
        std::vector<double> grid{-1.0 / 3};
        for (int i = -6; i <= 20; i++) {
            grid.push_back(0.05 * i);
        }
        for (double a : grid) {
            auto rho = werner_state(a);
            auto ev = hermitian_eigvals(partial_transpose(rho.mat(), {2, 2}, 2));
            std::vector<double> expected{(1 + a) / 4, (1 + a) / 4, (1 + a) / 4, (1 - 3 * a) / 4};
            std::sort(expected.begin(), expected.end(), std::greater<>());
            for (std::size_t i = 0; i < 4; i++) {
                worst = std::max(worst, std::abs(ev[i] - expected[i]));
            }
            boundary = boundary && (ppt_check(rho).detected == (a > 1.0 / 3));
        }
        out.push_back({"Werner PT spectrum and boundary", worst < 1e-10 && boundary,
                       "max eigenvalue error " + fmt("%.2e", worst) + (boundary ? ", boundary 1/3" : ", boundary wrong")});
    }
    {
        auto rho = DensityMatrix::trusted(bell_state(BellKind::PhiPlus).projector(), {2, 2});
        double lo = ppt_check(rho).evidence;
        out.push_back({"Bell PT minimum -1/2", std::abs(lo + 0.5) < 1e-10, "min eigenvalue " + fmt("%.12f", lo)});
    }
    {
        auto rho = upb_complement_state(tiles_upb(), {3, 3});
        auto r = realignment_check(rho);
        bool ppt = !ppt_check(rho).detected;
        out.push_back({"Tiles realignment 1.32", std::abs(r.evidence - 1.32) <= 0.005 && ppt,
                       "trace norm " + fmt("%.6f", r.evidence) + (ppt ? ", PPT" : ", NPT")});
    }
    for (const char *name : {"npt-5", "npt-4", "npt-11", "npt-10"}) {
        auto s = reference_subset(name);
        bool npt = !ppt_combinatorial(s);
        out.push_back({std::string(name) + " NPT", npt, "pt min " + fmt("%.6f", numeric_pt_min(s))});
    }
    for (const char *name : {"one-point-6", "one-point-8"}) {
        auto s = reference_subset(name);
        bool ppt = ppt_combinatorial(s);
        auto p = ppt ? entangled_one_point(s) : std::nullopt;
        out.push_back({std::string(name) + " one-point at (0,0)", ppt && p && *p == LatticePoint{0, 0},
                       p ? "point " + p->str() : std::string("no point")});
    }
    {
        auto s = reference_subset("k-10");
        bool ppt = ppt_combinatorial(s);
        bool silent = ppt && !entangled_one_point(s);
        int k00 = k_value(s, 0, 0);
        out.push_back({"k-10 k criterion k^00 = 1", ppt && silent && k00 == 1,
                       "one-point " + std::string(silent ? "silent" : "fires") + ", k^00 = " + std::to_string(k00)});
    }
    {
        auto c = classify(reference_subset("k-11"));
        out.push_back({"k-11 flagged", c.tag == Tag::PptEntangled, std::string("tag ") + tag_name(c.tag)});
    }
    {
        auto s = reference_subset("cover-10");
        auto cov = uniform_covering(s);
        bool ok = cov && cov->multiplicity == 2 && cov->total_weight() == 5;
        double err = ok ? separability_certificate(s, *cov).reconstruction_error : 1;
        out.push_back({"cover-10 covering 5 quadruples, M = 2", ok && err < 1e-12,
                       cov ? "M = " + std::to_string(cov->multiplicity) + ", N_Q = " +
                                 std::to_string(cov->total_weight()) + ", error " + fmt("%.1e", err)
                           : "no covering"});
    }
    for (auto [name, size] : {std::pair{"cover-8", 4}, std::pair{"cover-9", 9}}) {
        auto s = reference_subset(name);
        auto cov = uniform_covering(s);
        bool ok = cov && cov->total_weight() == size;
        if (ok) {
            separability_certificate(s, *cov);
        }
        out.push_back({std::string(name) + " decomposition of " + std::to_string(size), ok,
                       cov ? "M = " + std::to_string(cov->multiplicity) + ", N_Q = " +
                                 std::to_string(cov->total_weight())
                           : "no covering"});
    }
    out.push_back(special_check("special-8", {0, 0}));
    out.push_back(special_check("special-10", {3, 3}));
    out.push_back(special_check("special-11", {0, 0}));
    {
        auto c = classify(reference_subset("open-11"));
        std::string detail = std::string("tag ") + tag_name(c.tag);
        if (c.covering) {
            detail += ", covering M = " + std::to_string(c.covering->multiplicity) + " with " +
                      std::to_string(c.covering->total_weight()) + " quadruples";
        }
        out.push_back({"open-11 Unknown", c.tag == Tag::Unknown, detail});
    }
    return out;
}

}  // namespace latwit
