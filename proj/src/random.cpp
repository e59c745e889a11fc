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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ttnrep/errors.hpp"
#include "ttnrep/kernels.hpp"
#include "ttnrep/linalg.hpp"

namespace ttnrep {
namespace {

// Box-Muller on explicit 53-bit uniforms. std::normal_distribution is
// implementation-defined, so it cannot back a reproducibility contract.
class GaussianSource {
  public:
    explicit GaussianSource(std::uint64_t seed) : gen_(seed) {}

    cplx next_complex() {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

  private:
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    std::mt19937_64 gen_;
};

// Gram-Schmidt with a second orthogonalization pass; the positive column
// norms are the diagonal of the triangular factor, which makes the
// factorization (and hence the Haar sample) unique.
ComplexMatrix orthonormalize_gaussian(std::size_t n, std::size_t k, std::uint64_t seed) {
    GaussianSource g(seed);
    std::vector<std::vector<cplx>> cols(k, std::vector<cplx>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) cols[j][i] = g.next_complex();
    }
    for (std::size_t j = 0; j < k; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < j; ++i) {
                const cplx proj = kernels::cdotc(n, cols[i].data(), cols[j].data());
                kernels::axpy(n, -proj, cols[i].data(), cols[j].data());
            }
        }
        const double nrm = std::sqrt(kernels::nrm2sq(n, cols[j].data()));
        kernels::scal(n, 1.0 / nrm, cols[j].data());
    }
    ComplexMatrix m(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i, j) = cols[j][i];
    }
    return m;
}

} // namespace

Isometry haar_isometry(std::size_t d, std::uint64_t seed) {
    if (d < kMinSiteDim || d > kMaxSiteDim) {
        throw PreconditionError("haar_isometry: d must be in [2, 8]");
    }
    return Isometry::from_matrix(d, orthonormalize_gaussian(d * d, d, seed));
}

ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw PreconditionError("haar_unitary: n must be positive");
    return orthonormalize_gaussian(n, n, seed);
}

} // namespace ttnrep
