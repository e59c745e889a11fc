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

// Reference kernels. Every SIMD variant must agree with these up to
// FMA rounding; they are also the fallback on unknown hardware.

#include "ttnrep/kernels.hpp"

namespace ttnrep::kernels {
namespace {

void axpy_scalar(std::size_t n, cplx a, const cplx *x, cplx *y) {
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
    }
}

cplx cdotc_scalar(std::size_t n, const cplx *x, const cplx *y) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void scal_scalar(std::size_t n, cplx a, cplx *x) {
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        x[i] = cplx(ar * xr - ai * xi, ar * xi + ai * xr);
    }
}

double nrm2sq_scalar(std::size_t n, const cplx *x) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return s;
}

void rot_scalar(std::size_t n, cplx *x, cplx *y, double c, cplx s) {
    const double sr = s.real(), si = s.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        x[i] = cplx(c * xr + sr * yr - si * yi, c * xi + sr * yi + si * yr);
        // -conj(s) = (-sr, si)
        y[i] = cplx(c * yr - sr * xr - si * xi, c * yi - sr * xi + si * xr);
    }
}

} // namespace

const KernelTable scalar_table = {axpy_scalar, cdotc_scalar, scal_scalar, nrm2sq_scalar,
                                  rot_scalar};

} // namespace ttnrep::kernels
