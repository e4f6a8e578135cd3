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

#include "latwit/criteria.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "latwit/lattice.h"
#include "latwit/linalg.h"
#include "latwit/reference.h"
#include "latwit/seesaw.h"
#include "test_util.h"

using namespace latwit;

TEST(ppt_check, bell_state) {
    auto v = ppt_check(DensityMatrix(bell_state(BellKind::PhiPlus).projector(), {2, 2}));
    EXPECT_TRUE(v.detected);
    EXPECT_NEAR(v.evidence, -0.5, 1e-10);
}

TEST(ppt_check, werner_sweep) {
    std::vector<double> grid{-1.0 / 3};
    for (int i = 0; i <= 26; i++) {
        grid.push_back(-0.3 + 0.05 * i);
    }
    ASSERT_EQ(grid.size(), 28u);
    for (double a : grid) {
        auto rho = werner_state(a);
        auto ev = hermitian_eigvals(partial_transpose(rho.mat(), {2, 2}, 2));
        std::vector<double> expected{(1 + a) / 4, (1 + a) / 4, (1 + a) / 4, (1 - 3 * a) / 4};
        std::sort(expected.rbegin(), expected.rend());
        for (int i = 0; i < 4; i++) {
            EXPECT_NEAR(ev[i], expected[i], 1e-10) << "alpha=" << a;
        }
        EXPECT_EQ(ppt_check(rho).detected, a > 1.0 / 3 + 1e-12) << "alpha=" << a;
    }
}

TEST(realignment, detects_tiles_bound_entanglement) {
    auto rho = upb_complement_state(tiles_upb(), {3, 3});
    EXPECT_FALSE(ppt_check(rho).detected);
    auto r = realignment_check(rho);
    EXPECT_TRUE(r.detected);
    EXPECT_NEAR(r.evidence, 1.0874, 1e-3);
    EXPECT_THROW_CODE(realignment_check(horodecki_2x4(0.5)), ErrorCode::NonSquareParties);
}

TEST(realignment, trace_norm_convention_independent) {
    // The column-stacking reshuffle is a permutation of rows and columns of the
    // row-stacking one, so its trace norm must agree.
    auto rho = upb_complement_state(tiles_upb(), {3, 3}).mat();
    CMat alt(9);
    for (std::size_t m = 0; m < 3; m++) {
        for (std::size_t mu = 0; mu < 3; mu++) {
            for (std::size_t n = 0; n < 3; n++) {
                for (std::size_t nu = 0; nu < 3; nu++) {
                    alt(m * 3 + n, mu * 3 + nu) = rho(m * 3 + mu, n * 3 + nu);
                }
            }
        }
    }
    EXPECT_NEAR(trace_norm(alt), trace_norm(reshuffle(rho, {3, 3})), 1e-10);
}

TEST(reduction, cases) {
    EXPECT_TRUE(reduction_check(DensityMatrix(bell_state(BellKind::PsiMinus).projector(), {2, 2})).detected);
    EXPECT_FALSE(reduction_check(DensityMatrix(0.25 * CMat::identity(4), {2, 2})).detected);
    EXPECT_FALSE(reduction_check(upb_complement_state(tiles_upb(), {3, 3})).detected);
}

TEST(criteria, random_separable_states_not_detected) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 500; trial++) {
        const std::size_t d = 2 + trial % 3;
        auto rho = latwit::testing::random_separable({d, d}, rng);
        ASSERT_FALSE(ppt_check(rho).detected) << trial;
        ASSERT_FALSE(realignment_check(rho).detected) << trial;
        ASSERT_FALSE(reduction_check(rho).detected) << trial;
    }
}

TEST(criteria, low_dimension_cross_consistency) {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> rank(1, 6);
    int entangled = 0;
    for (int trial = 0; trial < 500; trial++) {
        BipartiteDims dims = trial % 2 == 0 ? BipartiteDims{2, 2} : BipartiteDims{2, 3};
        auto rho = latwit::testing::random_state(dims, rng, std::min<std::size_t>(rank(rng), dims.total()));
        bool ppt_detected = ppt_check(rho).detected;
        entangled += ppt_detected;
        if (!ppt_detected) {
            EXPECT_FALSE(reduction_check(rho).detected) << trial;
            if (dims.d1 == dims.d2) {
                EXPECT_FALSE(realignment_check(rho).detected) << trial;
            }
        }
        if (dims == BipartiteDims{2, 2}) {
            // In 2 x 2 the reduction criterion is equivalent to PPT.
            EXPECT_EQ(reduction_check(rho).detected, ppt_detected) << trial;
        }
    }
    EXPECT_GT(entangled, 100);
}

TEST(witness, diagonal_lattice_value) {
    LatticeSubset s = reference_subset("special-8");
    LatticePoint p{2, 2};
    auto w = diagonal_lattice_witness(s, p, 0.5);
    EXPECT_NEAR(witness_value(w, lattice_state(s)), -0.5 / (4 * s.size()), 1e-12);
    auto wn = w.normalized();
    EXPECT_NEAR(wn.mat.trace().real(), 1, 1e-12);
    EXPECT_LT(witness_value(wn, lattice_state(s)), 0);
    EXPECT_THROW_CODE(diagonal_lattice_witness(s, {0, 1}, 0.5), ErrorCode::PointNotInSubset);
    EXPECT_THROW_CODE(diagonal_lattice_witness(s, p, 0), ErrorCode::BadParameter);
    EXPECT_THROW_CODE(witness_value(w, werner_state(0)), ErrorCode::DimMismatch);
}

TEST(max_delta, full_lattice_is_zero) {
    EXPECT_EQ(max_delta(LatticeSubset::full(), {0, 0}), 0);
}

TEST(max_delta, special_point_only) {
    LatticeSubset s = reference_subset("special-8");
    EXPECT_LT(max_delta(s, {0, 0}), 1e-3);
    double d = max_delta(s, {2, 2});
    EXPECT_GT(d, 0.1);
    EXPECT_THROW_CODE(max_delta(s, {0, 1}), ErrorCode::PointNotInSubset);
}

TEST(max_delta, monotone_recheck_with_more_restarts) {
    for (const char *name : {"special-8", "special-10", "special-11"}) {
        LatticeSubset s = reference_subset(name);
        auto p = *special_subset_point(s);
        double d = max_delta(s, p);
        ASSERT_GT(d, 0) << name;
        auto w = diagonal_lattice_witness(s, p, d);
        auto check = block_positivity_seesaw(ChoiMap{w.mat, 4, 4}, 256, 0xBEEF);
        EXPECT_TRUE(std::holds_alternative<PresumedPositive>(check)) << name << " delta " << d;
        EXPECT_NEAR(witness_value(w, lattice_state(s)), -d / (4 * s.size()), 1e-9);
    }
}

TEST(edge_witness, tiles_state) {
    auto rho = upb_complement_state(tiles_upb(), {3, 3});
    auto ew = edge_witness(rho);
    EXPECT_GT(ew.epsilon, 0);
    EXPECT_EQ(ew.kernel_rank, 5u);
    EXPECT_GE(ew.pt_kernel_rank, 5u);
    EXPECT_NEAR(witness_value(ew.witness, rho), -ew.epsilon, 1e-9);
    auto check = block_positivity_seesaw(ChoiMap{ew.witness.mat, 3, 3}, 64, 1);
    EXPECT_TRUE(std::holds_alternative<PresumedPositive>(check));
}

TEST(edge_witness, errors) {
    EXPECT_THROW_CODE(edge_witness(DensityMatrix(bell_state(BellKind::PhiPlus).projector(), {2, 2})),
                      ErrorCode::NotPpt);
    EXPECT_THROW_CODE(edge_witness(werner_state(0)), ErrorCode::ZeroKernels);
}
