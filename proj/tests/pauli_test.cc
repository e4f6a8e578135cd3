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

#include "latwit/pauli.h"

#include <set>

#include "gtest/gtest.h"
#include "latwit/lattice_subset.h"
#include "latwit/linalg.h"
#include "test_util.h"

using namespace latwit;

TEST(pauli, matrices) {
    EXPECT_EQ(pauli_matrix(0), CMat::identity(2));
    EXPECT_EQ(pauli_matrix(1), (CMat{0, 1, 1, 0}));
    EXPECT_EQ(pauli_matrix(2), (CMat{0, cplx(0, -1), cplx(0, 1), 0}));
    EXPECT_EQ(pauli_matrix(3), (CMat{1, 0, 0, -1}));
    EXPECT_THROW_CODE(pauli_matrix(4), ErrorCode::OutOfRange);
}

TEST(pauli, product_table_exhaustive) {
    for (int a = 0; a < 4; a++) {
        for (int m = 0; m < 4; m++) {
            auto p = pauli_product(a, m);
            CMat lhs = pauli_matrix(a) * pauli_matrix(m);
            CMat rhs = p.phase * pauli_matrix(p.index);
            EXPECT_LT(lhs.max_abs_diff(rhs), 1e-15) << a << "," << m;
            EXPECT_EQ(product_index(a, m), a ^ m);
            EXPECT_EQ(p.index, product_index(a, m));
        }
    }
    EXPECT_EQ(pauli_product(1, 2).phase, cplx(0, 1));
    EXPECT_EQ(pauli_product(2, 1).phase, cplx(0, -1));
    EXPECT_EQ(pauli_product(3, 1).index, 2);
}

TEST(pauli, commutation_exhaustive) {
    for (int a = 0; a < 4; a++) {
        for (int g = 0; g < 4; g++) {
            CMat sa = pauli_matrix(a);
            CMat sg = pauli_matrix(g);
            CMat lhs = sa * sg;
            CMat rhs = static_cast<double>(commute_sign(a, g)) * (sg * sa);
            EXPECT_LT(lhs.max_abs_diff(rhs), 1e-15);
            bool commute = a == 0 || g == 0 || a == g;
            EXPECT_EQ(commute_sign(a, g), commute ? 1 : -1);
        }
    }
}

TEST(pauli, transpose_sign) {
    for (int a = 0; a < 4; a++) {
        CMat t = pauli_matrix(a).transpose();
        EXPECT_EQ(t, static_cast<double>(transpose_sign(a)) * pauli_matrix(a));
    }
    EXPECT_EQ(transpose_sign(2), -1);
}

TEST(pauli, words) {
    EXPECT_EQ(word_matrix({1, 3}), tensor(pauli_matrix(1), pauli_matrix(3)));
    EXPECT_EQ(word_matrix({2}), pauli_matrix(2));
    EXPECT_EQ(word_matrix({1, 2, 3}).dim(), 8u);
    EXPECT_THROW_CODE(word_matrix({0, 0, 0, 0}), ErrorCode::TooLarge);
    EXPECT_TRUE(words_commute({1, 1}, {2, 2}));
    EXPECT_FALSE(words_commute({1, 0}, {2, 2}));
    EXPECT_TRUE(words_commute({3, 3}, {1, 1}));
}

TEST(pauli, word_index_round_trip) {
    EXPECT_EQ(word_index({2, 1}), 9u);
    for (int n = 1; n <= 3; n++) {
        std::size_t count = std::size_t{1} << (2 * n);
        for (std::size_t i = 0; i < count; i++) {
            EXPECT_EQ(word_index(word_from_index(i, n)), i);
        }
    }
    LatticePoint p{2, 1};
    EXPECT_EQ(word_index(p.word()), 9u);
    EXPECT_EQ(p.bit(), 6);
    EXPECT_EQ(LatticePoint::from_bit(6), p);
}

TEST(pauli, words_orthogonal_in_hs) {
    for (std::size_t i = 0; i < 16; i++) {
        for (std::size_t j = 0; j < 16; j++) {
            cplx ip = hs_inner(word_matrix(word_from_index(i, 2)), word_matrix(word_from_index(j, 2)));
            EXPECT_LT(std::abs(ip - cplx(i == j ? 4.0 : 0.0)), 1e-14);
        }
    }
}

TEST(pauli, tau_is_translation) {
    // tau_t is a group action of (Z2 x Z2)^2 on the lattice.
    for (int tb = 0; tb < 16; tb++) {
        auto t = LatticePoint::from_bit(tb);
        std::set<int> image;
        for (int pb = 0; pb < 16; pb++) {
            auto p = LatticePoint::from_bit(pb);
            auto q = tau(t, p);
            image.insert(q.bit());
            EXPECT_EQ(tau(t, q), p);
            EXPECT_EQ(q.alpha, t.alpha ^ p.alpha);
        }
        EXPECT_EQ(image.size(), 16u);
    }
    EXPECT_EQ(tau({0, 0}, {3, 2}), (LatticePoint{3, 2}));
}

TEST(lattice_subset, basics) {
    auto s = LatticeSubset::from_points({{0, 0}, {1, 2}, {3, 3}});
    EXPECT_EQ(s.mask(), (1u << 0) | (1u << 9) | (1u << 15));
    EXPECT_EQ(s.size(), 3);
    EXPECT_TRUE(s.contains({1, 2}));
    EXPECT_FALSE(s.contains({2, 1}));
    EXPECT_EQ(s.chi(1, 2), 1);
    EXPECT_EQ(s.points().size(), 3u);
    EXPECT_EQ(s.complement().size(), 13);
    EXPECT_EQ(s.translated({1, 2}).mask(), LatticeSubset::from_points({{1, 2}, {0, 0}, {2, 1}}).mask());
    EXPECT_EQ(LatticeSubset::full().size(), 16);
}
