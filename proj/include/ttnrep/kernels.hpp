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

#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace ttnrep::kernels {

using cplx = std::complex<double>;

/// Vector primitives every dense routine in the library is built from.
/// Each entry points at either the scalar reference implementation or a
/// SIMD variant picked at startup; the two are equivalence-tested against
/// each other (they may differ by FMA rounding only).
struct KernelTable {
    /// y[i] += a * x[i]
    void (*axpy)(std::size_t n, cplx a, const cplx *x, cplx *y);
    /// sum_i conj(x[i]) * y[i]
    cplx (*cdotc)(std::size_t n, const cplx *x, const cplx *y);
    /// x[i] *= a
    void (*scal)(std::size_t n, cplx a, cplx *x);
    /// sum_i |x[i]|^2
    double (*nrm2sq)(std::size_t n, const cplx *x);
    /// Plane rotation with real cosine c and complex sine s:
    ///   x[i] <- c*x[i] + s*y[i],  y[i] <- -conj(s)*x[i] + c*y[i]
    void (*rot)(std::size_t n, cplx *x, cplx *y, double c, cplx s);
};

enum class Backend { kScalar, kAvx2, kNeon };

extern const KernelTable scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_table;
bool avx2_available();
#endif
#if defined(__aarch64__)
extern const KernelTable neon_table;
#endif

/// Table currently in use. Selected once at first call: best SIMD variant the
/// CPU supports, overridable with TTNREP_KERNELS=scalar|avx2|neon.
const KernelTable &active();

/// Force a backend (tests use this to compare variants). Throws
/// PreconditionError if the backend is not compiled in or not supported.
void set_backend(Backend b);

Backend active_backend();
std::string backend_name();

// Convenience forwarders.
inline void axpy(std::size_t n, cplx a, const cplx *x, cplx *y) { active().axpy(n, a, x, y); }
inline cplx cdotc(std::size_t n, const cplx *x, const cplx *y) { return active().cdotc(n, x, y); }
inline void scal(std::size_t n, cplx a, cplx *x) { active().scal(n, a, x); }
inline double nrm2sq(std::size_t n, const cplx *x) { return active().nrm2sq(n, x); }
inline void rot(std::size_t n, cplx *x, cplx *y, double c, cplx s) { active().rot(n, x, y, c, s); }

} // namespace ttnrep::kernels
