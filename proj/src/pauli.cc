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

#include "latwit/error.h"
#include "latwit/linalg.h"

namespace latwit {
namespace {

constexpr cplx I{0, 1};

void check_index(PauliIndex a) {
    if (a < 0 || a > 3) {
        throw Error(ErrorCode::OutOfRange, "Pauli index " + std::to_string(a) + " not in {0,1,2,3}");
    }
}

PhaseTables make_tables() {
    PhaseTables t{};
    t.product_index = {{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    t.product_phase = {{
        {1, 1, 1, 1},
        {1, 1, I, -I},
        {1, -I, 1, I},
        {1, I, -I, 1},
    }};
    t.commute_sign = {{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}};

    for (int a = 0; a < 4; a++) {
        for (int m = 0; m < 4; m++) {
            CMat lhs = pauli_matrix(a) * pauli_matrix(m);
            CMat rhs = t.product_phase[a][m] * pauli_matrix(t.product_index[a][m]);
            bool commute = (pauli_matrix(a) * pauli_matrix(m)) == (pauli_matrix(m) * pauli_matrix(a));
            if (!(lhs == rhs) || commute != (t.commute_sign[a][m] == 1)) {
                throw Error(ErrorCode::BadParameter, "Pauli phase table failed its self-check");
            }
        }
    }
    return t;
}

}  // namespace

std::string LatticePoint::str() const {
    return "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
}

const PhaseTables &phase_tables() {
    static const PhaseTables tables = make_tables();
    return tables;
}

CMat pauli_matrix(PauliIndex a) {
    check_index(a);
    switch (a) {
        case 0: return CMat{1, 0, 0, 1};
        case 1: return CMat{0, 1, 1, 0};
        case 2: return CMat{0, -I, I, 0};
        default: return CMat{1, 0, 0, -1};
    }
}

PauliProduct pauli_product(PauliIndex a, PauliIndex m) {
    check_index(a);
    check_index(m);
    const auto &t = phase_tables();
    return {t.product_index[a][m], t.product_phase[a][m]};
}

PauliIndex product_index(PauliIndex a, PauliIndex m) {
    check_index(a);
    check_index(m);
    return phase_tables().product_index[a][m];
}

int commute_sign(PauliIndex a, PauliIndex g) {
    check_index(a);
    check_index(g);
    return phase_tables().commute_sign[a][g];
}

int transpose_sign(PauliIndex a) {
    check_index(a);
    return a == 2 ? -1 : 1;
}

bool words_commute(const PauliWord &p, const PauliWord &q) {
    if (p.size() != q.size()) {
        throw Error(ErrorCode::LengthMismatch, "words of different length");
    }
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); i++) {
        sign *= commute_sign(p[i], q[i]);
    }
    return sign == 1;
}

CMat word_matrix(const PauliWord &p) {
    if (p.empty()) {
        throw Error(ErrorCode::LengthMismatch, "empty Pauli word");
    }
    if (p.size() > 3) {
        throw Error(ErrorCode::TooLarge, "word_matrix supports n <= 3");
    }
    CMat m = pauli_matrix(p[0]);
    for (std::size_t i = 1; i < p.size(); i++) {
        m = tensor(m, pauli_matrix(p[i]));
    }
    return m;
}

std::size_t word_index(const PauliWord &p) {
    std::size_t idx = 0;
    for (auto a : p) {
        check_index(a);
        idx = 4 * idx + static_cast<std::size_t>(a);
    }
    return idx;
}

PauliWord word_from_index(std::size_t index, int n) {
    PauliWord w(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; i--) {
        w[static_cast<std::size_t>(i)] = static_cast<PauliIndex>(index & 3);
        index >>= 2;
    }
    if (index != 0) {
        throw Error(ErrorCode::OutOfRange, "word index too large for n");
    }
    return w;
}

LatticePoint tau(LatticePoint t, LatticePoint p) {
    return {product_index(t.alpha, p.alpha), product_index(t.beta, p.beta)};
}

}  // namespace latwit
