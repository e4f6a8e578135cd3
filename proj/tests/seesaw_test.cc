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

#include "latwit/seesaw.h"

#include <random>

#include "gtest/gtest.h"
#include "latwit/linalg.h"
#include "latwit/states.h"
#include "test_util.h"

using namespace latwit;

TEST(seesaw, splitmix_reference_values) {
    // Published first output for state 0.
    EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFull);
    EXPECT_NE(splitmix64(1), splitmix64(2));
}

TEST(seesaw, product_expectation_matches_direct) {
    std::mt19937_64 rng(41);
    CMat h = latwit::testing::random_hermitian(6, rng);
    auto x = latwit::testing::random_unit(2, rng);
    auto y = latwit::testing::random_unit(3, rng);
    EXPECT_NEAR(product_expectation(h, {2, 3}, x, y), h.expectation(tensor(x, y)).real(), 1e-13);
    EXPECT_THROW_CODE(product_expectation(h, {2, 3}, y, x), ErrorCode::DimMismatch);
}

TEST(seesaw, product_operator_is_solved_exactly) {
    // For A (x) B the optimum is the product of the extreme eigenvalues.
    CMat a = CMat::diagonal({1, -2});
    CMat b = CMat::diagonal({3, 0.5, -1});
    auto best = optimize_product(tensor(a, b), {2, 3}, Extremum::Maximize, {.restarts = 8});
    EXPECT_NEAR(best.value, 3, 1e-9);
    auto worst = optimize_product(tensor(a, b), {2, 3}, Extremum::Minimize, {.restarts = 8});
    EXPECT_NEAR(worst.value, -6, 1e-9);
}

TEST(seesaw, max_overlap_with_bell_is_half) {
    CMat p = bell_state(BellKind::PhiPlus).projector();
    auto best = optimize_product(p, {2, 2}, Extremum::Maximize, {.restarts = 8});
    EXPECT_NEAR(best.value, 0.5, 1e-9);
    EXPECT_NEAR(product_expectation(p, {2, 2}, best.left, best.right), best.value, 1e-12);
}

TEST(seesaw, deterministic_for_a_seed) {
    std::mt19937_64 rng(42);
    CMat h = latwit::testing::random_hermitian(9, rng);
    SeesawOptions o{.restarts = 10, .seed = 7};
    auto a = optimize_product(h, {3, 3}, Extremum::Minimize, o);
    auto b = optimize_product(h, {3, 3}, Extremum::Minimize, o);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.restart, b.restart);
    EXPECT_EQ(a.sub_seed, splitmix64(7 + a.restart));
}

TEST(seesaw, stop_beyond_exits_early) {
    CMat p = -1.0 * bell_state(BellKind::PhiPlus).projector();
    SeesawOptions o{.restarts = 64, .stop_beyond = -0.1};
    auto r = optimize_product(p, {2, 2}, Extremum::Minimize, o);
    EXPECT_LT(r.value, -0.1);
    EXPECT_EQ(r.restart, 0);
}

TEST(seesaw, rejects_non_hermitian) {
    CMat m{0, 1, 0, 0};
    EXPECT_THROW_CODE(optimize_product(m, {1, 2}, Extremum::Maximize), ErrorCode::NotHermitian);
}
