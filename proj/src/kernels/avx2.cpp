// Copyright 2026 the ttnrep authors
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

// AVX2+FMA kernels over interleaved complex<double>. One __m256d holds two
// complex values [re0 im0 re1 im1]; fmaddsub pairs the real/imag parts of
// the complex product in a single instruction.

#include "ttnrep/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace ttnrep::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// a*x for two packed complex values: fmaddsub(ar, x, ai*swap(x)).
inline __m256d cmul_scalar(__m256d ar, __m256d ai, __m256d x) {
    __m256d xsw = _mm256_permute_pd(x, 0x5);
    return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xsw));
}

void axpy_avx2(std::size_t n, cplx a, const cplx *x, cplx *y) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    auto *xd = reinterpret_cast<const double *>(x);
    auto *yd = reinterpret_cast<double *>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(xd + 2 * i);
        __m256d vy = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(vy, cmul_scalar(ar, ai, vx)));
    }
    for (; i < n; ++i) {
        y[i] += a * x[i];
    }
}

cplx cdotc_avx2(std::size_t n, const cplx *x, const cplx *y) {
    const __m256d negate_even = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    auto *xd = reinterpret_cast<const double *>(x);
    auto *yd = reinterpret_cast<const double *>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(xd + 2 * i);
        __m256d vy = _mm256_loadu_pd(yd + 2 * i);
        acc_re = _mm256_fmadd_pd(vx, vy, acc_re);
        // even lane xi*yr, odd lane xr*yi; im = sum(odd) - sum(even)
        __m256d t = _mm256_mul_pd(_mm256_permute_pd(vx, 0x5), vy);
        acc_im = _mm256_add_pd(acc_im, _mm256_xor_pd(t, negate_even));
    }
    double re = hsum(acc_re), im = hsum(acc_im);
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void scal_avx2(std::size_t n, cplx a, cplx *x) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    auto *xd = reinterpret_cast<double *>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(xd + 2 * i);
        _mm256_storeu_pd(xd + 2 * i, cmul_scalar(ar, ai, vx));
    }
    for (; i < n; ++i) {
        x[i] *= a;
    }
}

double nrm2sq_avx2(std::size_t n, const cplx *x) {
    __m256d acc = _mm256_setzero_pd();
    auto *xd = reinterpret_cast<const double *>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(xd + 2 * i);
        acc = _mm256_fmadd_pd(vx, vx, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return s;
}

void rot_avx2(std::size_t n, cplx *x, cplx *y, double c, cplx s) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    const __m256d msr = _mm256_set1_pd(-s.real());
    auto *xd = reinterpret_cast<double *>(x);
    auto *yd = reinterpret_cast<double *>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(xd + 2 * i);
        __m256d vy = _mm256_loadu_pd(yd + 2 * i);
        __m256d nx = _mm256_fmadd_pd(vc, vx, cmul_scalar(sr, si, vy));
        __m256d ny = _mm256_fmadd_pd(vc, vy, cmul_scalar(msr, si, vx));
        _mm256_storeu_pd(xd + 2 * i, nx);
        _mm256_storeu_pd(yd + 2 * i, ny);
    }
    const cplx mcs = -std::conj(s);
    for (; i < n; ++i) {
        const cplx xi = x[i], yi = y[i];
        x[i] = c * xi + s * yi;
        y[i] = mcs * xi + c * yi;
    }
}

} // namespace

const KernelTable avx2_table = {axpy_avx2, cdotc_avx2, scal_avx2, nrm2sq_avx2, rot_avx2};

bool avx2_available() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

} // namespace ttnrep::kernels

#endif // x86_64
