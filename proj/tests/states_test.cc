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

#include "latwit/states.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "latwit/linalg.h"
#include "test_util.h"

using namespace latwit;

namespace {

void expect_valid_state(const DensityMatrix &rho) {
    const CMat &m = rho.mat();
    EXPECT_LT(m.hermiticity_defect(), 1e-10);
    EXPECT_NEAR(m.trace().real(), 1, 1e-10);
    EXPECT_NEAR(m.trace().imag(), 0, 1e-10);
    EXPECT_GE(min_eigenvalue(m), -1e-9);
    EXPECT_EQ(m.dim(), rho.dims().total());
}

std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.rbegin(), v.rend());
    return v;
}

}  // namespace

TEST(state_vector, validation) {
    EXPECT_THROW_CODE(StateVector({1, 1}), ErrorCode::BadParameter);
    EXPECT_THROW_CODE(StateVector::normalized({0, 0}), ErrorCode::BadParameter);
    auto v = StateVector::normalized({3, cplx(0, 4)});
    EXPECT_NEAR(std::abs(v[0] - cplx(0.6)), 0, 1e-15);
}

TEST(density_matrix, validation) {
    EXPECT_THROW_CODE(DensityMatrix(CMat::identity(4), {2, 2}), ErrorCode::BadParameter);
    EXPECT_THROW_CODE(DensityMatrix(0.25 * CMat::identity(4), {2, 3}), ErrorCode::DimMismatch);
    EXPECT_THROW_CODE(DensityMatrix(CMat::diagonal({1.5, -0.5}), {1, 2}), ErrorCode::BadParameter);
    EXPECT_THROW_CODE(DensityMatrix((CMat{0.5, 0.5, 0, 0.5}), {1, 2}), ErrorCode::BadParameter);
}

TEST(max_symmetric, projector_is_idempotent) {
    for (std::size_t d : {2u, 3u, 4u}) {
        CMat p = max_symmetric_vector(d).projector();
        EXPECT_LT((p * p).max_abs_diff(p), 1e-14);
        EXPECT_NEAR(p.trace().real(), 1, 1e-14);
        EXPECT_NEAR(std::abs(p(0, d * d - 1)), 1.0 / d, 1e-15);
    }
}

TEST(basis, completeness) {
    for (int n = 1; n <= 2; n++) {
        std::size_t words = std::size_t{1} << (2 * n);
        CMat sum(words);
        for (std::size_t i = 0; i < words; i++) {
            sum += basis_vector(word_from_index(i, n)).projector();
        }
        EXPECT_LT(sum.max_abs_diff(CMat::identity(words)), 1e-12) << "n=" << n;
    }
}

TEST(basis, bell_states_are_sigma_basis) {
    auto close = [](const StateVector &a, const StateVector &b) {
        return a.projector().max_abs_diff(b.projector()) < 1e-14;
    };
    EXPECT_TRUE(close(basis_vector({0}), bell_state(BellKind::PhiPlus)));
    EXPECT_TRUE(close(basis_vector({1}), bell_state(BellKind::PsiPlus)));
    EXPECT_TRUE(close(basis_vector({2}), bell_state(BellKind::PsiMinus)));
    EXPECT_TRUE(close(basis_vector({3}), bell_state(BellKind::PhiMinus)));
}

TEST(sigma_diagonal, eigenvalues_are_weights) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0, 1);
    for (int n = 1; n <= 2; n++) {
        for (int trial = 0; trial < 20; trial++) {
            SigmaDiagonalState s{n, std::vector<double>(std::size_t{1} << (2 * n))};
            double total = 0;
            for (auto &w : s.weights) {
                total += (w = u(rng));
            }
            for (auto &w : s.weights) {
                w /= total;
            }
            auto rho = sigma_diagonal_state(s);
            expect_valid_state(rho);
            auto ev = hermitian_eigvals(rho.mat());
            auto expected = sorted_desc(s.weights);
            for (std::size_t i = 0; i < ev.size(); i++) {
                EXPECT_NEAR(ev[i], expected[i], 1e-10);
            }
        }
    }
    EXPECT_THROW_CODE(sigma_diagonal_state({1, {0.5, 0.5, 0.5, -0.5}}), ErrorCode::BadWeights);
    EXPECT_THROW_CODE(sigma_diagonal_state({1, {0.5, 0.5}}), ErrorCode::BadWeights);
}

TEST(lattice_state, structure) {
    LatticeSubset s(0xEEE1);
    auto rho = lattice_state(s);
    expect_valid_state(rho);
    auto ev = hermitian_eigvals(rho.mat());
    for (int i = 0; i < 16; i++) {
        EXPECT_NEAR(ev[i], i < s.size() ? 1.0 / s.size() : 0.0, 1e-12);
    }
    for (const auto &p : s.points()) {
        EXPECT_NEAR(rho.mat().expectation(basis_vector(p.word()).amplitudes()).real(), 1.0 / s.size(), 1e-14);
    }
    EXPECT_THROW_CODE(lattice_state(LatticeSubset(0)), ErrorCode::EmptySubset);
}

TEST(werner, validity_and_range) {
    for (double a : {-1.0 / 3, 0.0, 0.5, 1.0}) {
        expect_valid_state(werner_state(a));
    }
    EXPECT_THROW_CODE(werner_state(1.1), ErrorCode::OutOfRange);
    EXPECT_THROW_CODE(werner_state(-0.5), ErrorCode::OutOfRange);
}

TEST(named_states, all_valid) {
    expect_valid_state(upb_complement_state(tiles_upb(), {3, 3}));
    for (double a : {0.1, 0.5, 0.9}) {
        expect_valid_state(horodecki_3x3(a));
    }
    for (double b : {0.0, 0.3, 1.0}) {
        expect_valid_state(horodecki_2x4(b));
    }
    EXPECT_THROW_CODE(horodecki_3x3(0.0), ErrorCode::OutOfRange);
    EXPECT_THROW_CODE(horodecki_2x4(1.5), ErrorCode::OutOfRange);
}

TEST(upb, tiles_orthonormal_products) {
    auto v = tiles_upb();
    ASSERT_EQ(v.size(), 5u);
    for (std::size_t i = 0; i < v.size(); i++) {
        for (std::size_t j = 0; j < v.size(); j++) {
            cplx ip = 0;
            for (std::size_t k = 0; k < 9; k++) {
                ip += std::conj(v[i][k]) * v[j][k];
            }
            EXPECT_LT(std::abs(ip - cplx(i == j ? 1.0 : 0.0)), 1e-12);
        }
        EXPECT_EQ(schmidt(v[i], {3, 3}).rank, 1u);
    }
    auto rho = upb_complement_state(v, {3, 3});
    EXPECT_LT(rho.mat().max_abs_diff((1.0 / 4) * (CMat::identity(9) - [&] {
        CMat p(9);
        for (const auto &x : v) {
            p += x.projector();
        }
        return p;
    }())),
              1e-12);
}

TEST(upb, even_d_orthonormal) {
    for (std::size_t d : {4u, 6u}) {
        auto v = even_d_upb(d);
        for (std::size_t i = 0; i < v.size(); i++) {
            EXPECT_EQ(schmidt(v[i], {d, d}).rank, 1u);
            for (std::size_t j = 0; j < v.size(); j++) {
                cplx ip = 0;
                for (std::size_t k = 0; k < d * d; k++) {
                    ip += std::conj(v[i][k]) * v[j][k];
                }
                ASSERT_LT(std::abs(ip - cplx(i == j ? 1.0 : 0.0)), 1e-12) << d << " " << i << " " << j;
            }
        }
    }
    EXPECT_THROW_CODE(even_d_upb(5), ErrorCode::OddDim);
    EXPECT_THROW_CODE(even_d_upb(2), ErrorCode::BadParameter);
}

TEST(entropy, cases) {
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(bell_state(BellKind::PhiPlus).projector(), {2, 2})), 0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(0.25 * CMat::identity(4), {2, 2})), std::log(4.0), 1e-12);
    auto reduced = partial_trace(bell_state(BellKind::PsiMinus).projector(), {2, 2}, 2);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(reduced, {1, 2})), std::log(2.0), 1e-12);
}

TEST(schmidt, bell_and_product) {
    auto s = schmidt(bell_state(BellKind::PhiPlus), {2, 2});
    EXPECT_EQ(s.rank, 2u);
    EXPECT_NEAR(s.coefficients[0], 1 / std::sqrt(2.0), 1e-12);
    auto p = schmidt(StateVector(tensor(std::vector<cplx>{0.6, 0.8}, std::vector<cplx>{0, 1, 0})), {2, 3});
    EXPECT_EQ(p.rank, 1u);
    EXPECT_NEAR(p.coefficients[0], 1, 1e-12);
}

TEST(schmidt, matches_singular_values_and_reconstructs) {
    std::mt19937_64 rng(22);
    for (auto dims : {BipartiteDims{2, 2}, BipartiteDims{2, 3}, BipartiteDims{3, 2}, BipartiteDims{4, 4}}) {
        for (int trial = 0; trial < 25; trial++) {
            StateVector v(latwit::testing::random_unit(dims.total(), rng));
            auto s = schmidt(v, dims);
            // Oracle: singular values of the amplitude matrix, padded to square.
            const std::size_t n = std::max(dims.d1, dims.d2);
            CMat a(n);
            for (std::size_t i = 0; i < dims.d1; i++) {
                for (std::size_t j = 0; j < dims.d2; j++) {
                    a(i, j) = v[i * dims.d2 + j];
                }
            }
            auto sv = singular_values(a);
            ASSERT_EQ(s.coefficients.size(), std::min(dims.d1, dims.d2));
            for (std::size_t k = 0; k < s.coefficients.size(); k++) {
                EXPECT_NEAR(s.coefficients[k], sv[k], 1e-10);
            }
            std::vector<cplx> rebuilt(dims.total());
            for (std::size_t k = 0; k < s.rank; k++) {
                auto t = tensor(s.left[k], s.right[k]);
                for (std::size_t i = 0; i < t.size(); i++) {
                    rebuilt[i] += s.coefficients[k] * t[i];
                }
            }
            for (std::size_t i = 0; i < rebuilt.size(); i++) {
                EXPECT_LT(std::abs(rebuilt[i] - v[i]), 1e-10);
            }
        }
    }
}
