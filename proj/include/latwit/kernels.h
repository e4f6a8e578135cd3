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

#pragma once

// Hot loops of the dense linear algebra. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2+FMA variant chosen at runtime.

#include <complex>
#include <cstddef>

namespace latwit::kernels {

using cplx = std::complex<double>;

struct KernelTable {
    const char *name;
    /// c = a * b for n x n row-major matrices. c must not alias a or b.
    void (*matmul)(std::size_t n, const cplx *a, const cplx *b, cplx *c);
    /// y = a * x. y must not alias x.
    void (*matvec)(std::size_t n, const cplx *a, const cplx *x, cplx *y);
    /// sum_i conj(x_i) y_i.
    cplx (*dotc)(std::size_t n, const cplx *x, const cplx *y);
    /// x' = c x - conj(s) y,  y' = s x + c y.
    void (*rotate)(std::size_t n, cplx *x, cplx *y, double c, cplx s);
};

const KernelTable &scalar_kernels();
/// nullptr when not compiled in or not supported by the running CPU.
const KernelTable *avx2_kernels();
/// The table used by the library: AVX2 when available unless the environment
/// variable LATWIT_KERNELS=scalar is set. Chosen once.
const KernelTable &active();

}  // namespace latwit::kernels
