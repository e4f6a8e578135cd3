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

// Compiled with -mavx2 -mfma. Nothing in this file may run before
// avx2_kernels() has confirmed CPU support.

#include "latwit/kernels.h"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define LATWIT_HAVE_AVX2 1
#endif

namespace latwit::kernels {

#ifdef LATWIT_HAVE_AVX2
namespace {

// A __m256d holds two complex numbers as [re0, im0, re1, im1].

inline __m256d swap_pairs(__m256d v) {
    return _mm256_permute_pd(v, 0b0101);
}

// v * (sr + i si) for a complex scalar.
inline __m256d mul_scalar(__m256d v, __m256d sr, __m256d si) {
    return _mm256_fmaddsub_pd(v, sr, _mm256_mul_pd(swap_pairs(v), si));
}

inline cplx hsum_pairs(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

void matmul(std::size_t n, const cplx *a, const cplx *b, cplx *c) {
    const std::size_t pairs = n / 2;
    const bool tail = (n & 1) != 0;
    for (std::size_t i = 0; i < n; i++) {
        const cplx *arow = a + i * n;
        double *crow = reinterpret_cast<double *>(c + i * n);
        for (std::size_t jp = 0; jp < pairs; jp++) {
            __m256d acc_r = _mm256_setzero_pd();
            __m256d acc_i = _mm256_setzero_pd();
            for (std::size_t k = 0; k < n; k++) {
                __m256d bv = _mm256_loadu_pd(reinterpret_cast<const double *>(b + k * n) + 4 * jp);
                acc_r = _mm256_fmadd_pd(bv, _mm256_set1_pd(arow[k].real()), acc_r);
                acc_i = _mm256_fmadd_pd(swap_pairs(bv), _mm256_set1_pd(arow[k].imag()), acc_i);
            }
            _mm256_storeu_pd(crow + 4 * jp, _mm256_addsub_pd(acc_r, acc_i));
        }
        if (tail) {
            cplx acc = 0;
            for (std::size_t k = 0; k < n; k++) {
                acc += arow[k] * b[k * n + n - 1];
            }
            c[i * n + n - 1] = acc;
        }
    }
}

void matvec(std::size_t n, const cplx *a, const cplx *x, cplx *y) {
    const std::size_t pairs = n / 2;
    const double *xd = reinterpret_cast<const double *>(x);
    for (std::size_t i = 0; i < n; i++) {
        const double *ad = reinterpret_cast<const double *>(a + i * n);
        __m256d acc_r = _mm256_setzero_pd();
        __m256d acc_i = _mm256_setzero_pd();
        for (std::size_t kp = 0; kp < pairs; kp++) {
            __m256d av = _mm256_loadu_pd(ad + 4 * kp);
            __m256d xv = _mm256_loadu_pd(xd + 4 * kp);
            acc_r = _mm256_fmadd_pd(av, _mm256_movedup_pd(xv), acc_r);
            acc_i = _mm256_fmadd_pd(swap_pairs(av), _mm256_permute_pd(xv, 0b1111), acc_i);
        }
        cplx acc = hsum_pairs(_mm256_addsub_pd(acc_r, acc_i));
        if (n & 1) {
            acc += a[i * n + n - 1] * x[n - 1];
        }
        y[i] = acc;
    }
}

cplx dotc(std::size_t n, const cplx *x, const cplx *y) {
    const std::size_t pairs = n / 2;
    const double *xd = reinterpret_cast<const double *>(x);
    const double *yd = reinterpret_cast<const double *>(y);
    __m256d acc_r = _mm256_setzero_pd();
    __m256d acc_i = _mm256_setzero_pd();
    for (std::size_t p = 0; p < pairs; p++) {
        __m256d xv = _mm256_loadu_pd(xd + 4 * p);
        __m256d yv = _mm256_loadu_pd(yd + 4 * p);
        acc_r = _mm256_fmadd_pd(yv, _mm256_movedup_pd(xv), acc_r);
        acc_i = _mm256_fmadd_pd(swap_pairs(yv), _mm256_permute_pd(xv, 0b1111), acc_i);
    }
    __m256d neg = _mm256_sub_pd(_mm256_setzero_pd(), acc_i);
    cplx acc = hsum_pairs(_mm256_addsub_pd(acc_r, neg));
    if (n & 1) {
        acc += std::conj(x[n - 1]) * y[n - 1];
    }
    return acc;
}

void rotate(std::size_t n, cplx *x, cplx *y, double c, cplx s) {
    const std::size_t pairs = n / 2;
    double *xd = reinterpret_cast<double *>(x);
    double *yd = reinterpret_cast<double *>(y);
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    const __m256d nsi = _mm256_set1_pd(-s.imag());
    for (std::size_t p = 0; p < pairs; p++) {
        __m256d xv = _mm256_loadu_pd(xd + 4 * p);
        __m256d yv = _mm256_loadu_pd(yd + 4 * p);
        __m256d xn = _mm256_fmsub_pd(cv, xv, mul_scalar(yv, sr, nsi));
        __m256d yn = _mm256_fmadd_pd(cv, yv, mul_scalar(xv, sr, si));
        _mm256_storeu_pd(xd + 4 * p, xn);
        _mm256_storeu_pd(yd + 4 * p, yn);
    }
    if (n & 1) {
        cplx xi = x[n - 1];
        cplx yi = y[n - 1];
        x[n - 1] = c * xi - std::conj(s) * yi;
        y[n - 1] = s * xi + c * yi;
    }
}

}  // namespace

const KernelTable *avx2_kernels() {
    static const KernelTable table{"avx2", &matmul, &matvec, &dotc, &rotate};
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &table : nullptr;
}

#else

const KernelTable *avx2_kernels() {
    return nullptr;
}

#endif

}  // namespace latwit::kernels
