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

// NEON kernels (aarch64 baseline). vld2q deinterleaves two complex values
// into separate real/imag vectors, so the complex product is plain FMA.

#include "ttnrep/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace ttnrep::kernels {
namespace {

void axpy_neon(std::size_t n, cplx a, const cplx *x, cplx *y) {
    const float64x2_t ar = vdupq_n_f64(a.real());
    const float64x2_t ai = vdupq_n_f64(a.imag());
    auto *xd = reinterpret_cast<const double *>(x);
    auto *yd = reinterpret_cast<double *>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t vx = vld2q_f64(xd + 2 * i);
        float64x2x2_t vy = vld2q_f64(yd + 2 * i);
        vy.val[0] = vfmaq_f64(vy.val[0], ar, vx.val[0]);
        vy.val[0] = vfmsq_f64(vy.val[0], ai, vx.val[1]);
        vy.val[1] = vfmaq_f64(vy.val[1], ar, vx.val[1]);
        vy.val[1] = vfmaq_f64(vy.val[1], ai, vx.val[0]);
        vst2q_f64(yd + 2 * i, vy);
    }
    for (; i < n; ++i) {
        y[i] += a * x[i];
    }
}

cplx cdotc_neon(std::size_t n, const cplx *x, const cplx *y) {
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    auto *xd = reinterpret_cast<const double *>(x);
    auto *yd = reinterpret_cast<const double *>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t vx = vld2q_f64(xd + 2 * i);
        float64x2x2_t vy = vld2q_f64(yd + 2 * i);
        acc_re = vfmaq_f64(acc_re, vx.val[0], vy.val[0]);
        acc_re = vfmaq_f64(acc_re, vx.val[1], vy.val[1]);
        acc_im = vfmaq_f64(acc_im, vx.val[0], vy.val[1]);
        acc_im = vfmsq_f64(acc_im, vx.val[1], vy.val[0]);
    }
    double re = vaddvq_f64(acc_re), im = vaddvq_f64(acc_im);
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void scal_neon(std::size_t n, cplx a, cplx *x) {
    const float64x2_t ar = vdupq_n_f64(a.real());
    const float64x2_t ai = vdupq_n_f64(a.imag());
    auto *xd = reinterpret_cast<double *>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t vx = vld2q_f64(xd + 2 * i);
        float64x2x2_t out;
        out.val[0] = vfmsq_f64(vmulq_f64(ar, vx.val[0]), ai, vx.val[1]);
        out.val[1] = vfmaq_f64(vmulq_f64(ar, vx.val[1]), ai, vx.val[0]);
        vst2q_f64(xd + 2 * i, out);
    }
    for (; i < n; ++i) {
        x[i] *= a;
    }
}

double nrm2sq_neon(std::size_t n, const cplx *x) {
    float64x2_t acc = vdupq_n_f64(0.0);
    auto *xd = reinterpret_cast<const double *>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t vx = vld2q_f64(xd + 2 * i);
        acc = vfmaq_f64(acc, vx.val[0], vx.val[0]);
        acc = vfmaq_f64(acc, vx.val[1], vx.val[1]);
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) {
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return s;
}

void rot_neon(std::size_t n, cplx *x, cplx *y, double c, cplx s) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t sr = vdupq_n_f64(s.real());
    const float64x2_t si = vdupq_n_f64(s.imag());
    auto *xd = reinterpret_cast<double *>(x);
    auto *yd = reinterpret_cast<double *>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t vx = vld2q_f64(xd + 2 * i);
        float64x2x2_t vy = vld2q_f64(yd + 2 * i);
        float64x2x2_t nx, ny;
        nx.val[0] = vfmsq_f64(vfmaq_f64(vmulq_f64(vc, vx.val[0]), sr, vy.val[0]), si, vy.val[1]);
        nx.val[1] = vfmaq_f64(vfmaq_f64(vmulq_f64(vc, vx.val[1]), sr, vy.val[1]), si, vy.val[0]);
        ny.val[0] = vfmsq_f64(vfmsq_f64(vmulq_f64(vc, vy.val[0]), sr, vx.val[0]), si, vx.val[1]);
        ny.val[1] = vfmaq_f64(vfmsq_f64(vmulq_f64(vc, vy.val[1]), sr, vx.val[1]), si, vx.val[0]);
        vst2q_f64(xd + 2 * i, nx);
        vst2q_f64(yd + 2 * i, ny);
    }
    const cplx mcs = -std::conj(s);
    for (; i < n; ++i) {
        const cplx xi = x[i], yi = y[i];
        x[i] = c * xi + s * yi;
        y[i] = mcs * xi + c * yi;
    }
}

} // namespace

const KernelTable neon_table = {axpy_neon, cdotc_neon, scal_neon, nrm2sq_neon, rot_neon};

} // namespace ttnrep::kernels

#endif // aarch64
