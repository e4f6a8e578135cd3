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

#include <cmath>
#include <limits>
#include <random>

#include "latwit/error.h"
#include "latwit/kernels.h"
#include "latwit/linalg.h"

namespace latwit {
namespace {

// M(x)_{jl} = sum_{ik} conj(x_i) x_k H_{(i,j),(k,l)}.
CMat condition_on_left(const CMat &h, BipartiteDims dims, const std::vector<cplx> &x) {
    const std::size_t d1 = dims.d1;
    const std::size_t d2 = dims.d2;
    CMat m(d2);
    for (std::size_t i = 0; i < d1; i++) {
        for (std::size_t k = 0; k < d1; k++) {
            cplx c = std::conj(x[i]) * x[k];
            for (std::size_t j = 0; j < d2; j++) {
                const cplx *src = h.row(i * d2 + j) + k * d2;
                cplx *dst = m.row(j);
                for (std::size_t l = 0; l < d2; l++) {
                    dst[l] += c * src[l];
                }
            }
        }
    }
    return m;
}

// N(y)_{ik} = sum_{jl} conj(y_j) y_l H_{(i,j),(k,l)}.
CMat condition_on_right(const CMat &h, BipartiteDims dims, const std::vector<cplx> &y) {
    const std::size_t d1 = dims.d1;
    const std::size_t d2 = dims.d2;
    const auto &k = kernels::active();
    CMat n(d1);
    std::vector<cplx> tmp(d2);
    for (std::size_t i = 0; i < d1; i++) {
        for (std::size_t kk = 0; kk < d1; kk++) {
            for (std::size_t j = 0; j < d2; j++) {
                const cplx *src = h.row(i * d2 + j) + kk * d2;
                cplx row = 0;
                for (std::size_t l = 0; l < d2; l++) {
                    row += src[l] * y[l];
                }
                tmp[j] = row;
            }
            n(i, kk) = k.dotc(d2, y.data(), tmp.data());
        }
    }
    return n;
}

std::pair<double, std::vector<cplx>> extreme_eigvec(const CMat &m, Extremum goal) {
    auto eig = hermitian_eig(m, 1e-8 * (1 + m.frobenius_norm()));
    std::size_t j = goal == Extremum::Maximize ? 0 : m.dim() - 1;
    return {eig.values[j], eig.vector(j)};
}

std::vector<cplx> random_unit(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> v(d);
    double norm = 0;
    for (auto &z : v) {
        z = {g(rng), g(rng)};
        norm += std::norm(z);
    }
    norm = std::sqrt(norm);
    for (auto &z : v) {
        z /= norm;
    }
    return v;
}

bool better(double a, double b, Extremum goal) {
    return goal == Extremum::Maximize ? a > b : a < b;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double product_expectation(const CMat &h, BipartiteDims dims, const std::vector<cplx> &x,
                           const std::vector<cplx> &y) {
    if (dims.total() != h.dim() || x.size() != dims.d1 || y.size() != dims.d2) {
        throw Error(ErrorCode::DimMismatch, "product vector does not match dims");
    }
    return h.expectation(tensor(x, y)).real();
}

ProductOptimum optimize_product(const CMat &h, BipartiteDims dims, Extremum goal, const SeesawOptions &options) {
    if (dims.total() != h.dim() || dims.d1 == 0) {
        throw Error(ErrorCode::DimMismatch, "operator dim does not match d1*d2");
    }
    if (!h.is_hermitian(1e-9)) {
        throw Error(ErrorCode::NotHermitian, "see-saw needs a Hermitian operator");
    }
    ProductOptimum best;
    for (int r = 0; r < options.restarts; r++) {
        std::uint64_t sub_seed = splitmix64(options.seed + static_cast<std::uint64_t>(r));
        std::mt19937_64 rng(sub_seed);
        std::vector<cplx> x = random_unit(dims.d1, rng);
        std::vector<cplx> y;
        double value = 0;
        double previous = std::numeric_limits<double>::quiet_NaN();
        for (int it = 0; it < options.max_iterations; it++) {
            auto [vy, ny] = extreme_eigvec(condition_on_left(h, dims, x), goal);
            y = std::move(ny);
            auto [vx, nx] = extreme_eigvec(condition_on_right(h, dims, y), goal);
            x = std::move(nx);
            value = vx;
            if (std::abs(value - previous) < options.tolerance) {
                break;
            }
            previous = value;
        }
        value = product_expectation(h, dims, x, y);
        if (best.restart < 0 || better(value, best.value, goal)) {
            best = {value, x, y, r, sub_seed};
        }
        if (options.stop_beyond && better(best.value, *options.stop_beyond, goal)) {
            break;
        }
    }
    return best;
}

}  // namespace latwit
