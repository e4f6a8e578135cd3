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

#include "latwit/kernels.h"

namespace latwit::kernels {
namespace {

void matmul(std::size_t n, const cplx *a, const cplx *b, cplx *c) {
    for (std::size_t i = 0; i < n * n; i++) {
        c[i] = 0;
    }
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t k = 0; k < n; k++) {
            cplx aik = a[i * n + k];
            if (aik == cplx{}) {
                continue;
            }
            const cplx *brow = b + k * n;
            cplx *crow = c + i * n;
            for (std::size_t j = 0; j < n; j++) {
                crow[j] += aik * brow[j];
            }
        }
    }
}

void matvec(std::size_t n, const cplx *a, const cplx *x, cplx *y) {
    for (std::size_t i = 0; i < n; i++) {
        cplx acc = 0;
        for (std::size_t k = 0; k < n; k++) {
            acc += a[i * n + k] * x[k];
        }
        y[i] = acc;
    }
}

cplx dotc(std::size_t n, const cplx *x, const cplx *y) {
    cplx acc = 0;
    for (std::size_t i = 0; i < n; i++) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

void rotate(std::size_t n, cplx *x, cplx *y, double c, cplx s) {
    cplx sc = std::conj(s);
    for (std::size_t i = 0; i < n; i++) {
        cplx xi = x[i];
        cplx yi = y[i];
        x[i] = c * xi - sc * yi;
        y[i] = s * xi + c * yi;
    }
}

}  // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{"scalar", &matmul, &matvec, &dotc, &rotate};
    return table;
}

}  // namespace latwit::kernels
