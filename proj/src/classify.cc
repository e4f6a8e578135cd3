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

#include "latwit/classify.h"

#include <algorithm>
#include <thread>

#include "latwit/criteria.h"
#include "latwit/error.h"
#include "latwit/linalg.h"
#include "latwit/states.h"

namespace latwit {

const char *tag_name(Tag tag) {
    switch (tag) {
        case Tag::Separable: return "Separable";
        case Tag::NptEntangled: return "NptEntangled";
        case Tag::PptEntangled: return "PptEntangled";
        case Tag::Unknown: return "Unknown";
    }
    return "Unknown";
}

double numeric_pt_min(LatticeSubset subset) {
    return min_eigenvalue(partial_transpose(lattice_state(subset).mat(), {4, 4}, 2));
}

Classification classify(LatticeSubset subset, const ClassifyOptions &options) {
    if (subset.empty()) {
        throw Error(ErrorCode::EmptySubset, "cannot classify the empty subset");
    }
    Classification c;
    c.subset = subset;
    c.ppt = ppt_combinatorial(subset);
    c.special_point = special_subset_point(subset);
    if (!c.ppt || options.numeric_pt) {
        c.pt_min_eigenvalue = numeric_pt_min(subset);
    }
    if (!c.ppt) {
        c.tag = Tag::NptEntangled;
        c.criterion = "ppt";
        return c;
    }
    c.one_point = entangled_one_point(subset);
    c.k_hit = k_criterion(subset);
    if (c.special_point || c.one_point || c.k_hit) {
        c.tag = Tag::PptEntangled;
        c.criterion = c.special_point ? "special_subset" : c.one_point ? "one_point" : "k_criterion";
        if (options.witness && c.special_point) {
            c.witness_delta = max_delta(subset, *c.special_point, options.seed);
        }
        return c;
    }
    c.covering = uniform_covering(subset, options.max_multiplicity);
    if (c.covering) {
        c.tag = Tag::Separable;
        c.criterion = "uniform_covering";
    } else {
        c.tag = Tag::Unknown;
        c.criterion = "none";
    }
    return c;
}

std::vector<SurveyRow> survey_all(const SurveyOptions &options) {
    constexpr std::size_t kCount = 65535;
    std::vector<SurveyRow> rows(kCount);
    ClassifyOptions co;
    co.max_multiplicity = options.max_multiplicity;
    co.seed = options.seed;
    co.numeric_pt = options.cross_validate;
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < kCount; i += stride) {
            auto subset = LatticeSubset(static_cast<std::uint16_t>(i + 1));
            SurveyRow row{classify(subset, co), std::nullopt};
            if (options.cross_validate) {
                row.numeric_agrees = (*row.classification.pt_min_eigenvalue >= -1e-9) == row.classification.ppt;
            }
            rows[i] = std::move(row);
        }
    };
    const auto workers = static_cast<std::size_t>(std::max(1, options.workers));
    if (workers == 1) {
        work(0, 1);
        return rows;
    }
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; w++) {
        threads.emplace_back(work, w, workers);
    }
    for (auto &t : threads) {
        t.join();
    }
    return rows;
}

}  // namespace latwit
