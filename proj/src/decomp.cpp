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

// Jacobi-type decompositions. All matrices here are at most d^3 <= 512
// dimensional, where cyclic Jacobi is both simple and accurate to a few ulp.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ttnrep/errors.hpp"
#include "ttnrep/kernels.hpp"
#include "ttnrep/linalg.hpp"

namespace ttnrep {
namespace {

// Tangent of the Jacobi angle for the Hermitian 2x2 [[alpha, beta],[conj(beta), gamma]]
// with beta != 0; returns (c, sigma) such that the plane rotation with columns
// (c, -conj(sigma)) / (sigma, c) diagonalizes it. Smaller-angle root for stability.
std::pair<double, cplx> jacobi_rotation(double alpha, double gamma, cplx beta) {
    const double abeta = std::abs(beta);
    const cplx phase = beta / abeta;
    const double zeta = (alpha - gamma) / (2.0 * abeta);
    const double t = (zeta >= 0.0 ? -1.0 : 1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, (t * c) * phase};
}

constexpr double kConvergence = 1e-14;
constexpr int kMaxSweeps = 100;

} // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix &m, double hermiticity_tol) {
    if (m.rows() != m.cols()) throw PreconditionError("eigensystem: matrix not square");
    if (!m.all_finite()) throw PreconditionError("eigensystem: non-finite entries");
    const std::size_t n = m.rows();
    const double scale = std::max(1.0, max_abs(m));
    double herm_dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            herm_dev = std::max(herm_dev, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    if (herm_dev > hermiticity_tol * scale) {
        std::ostringstream os;
        os << "eigensystem: matrix not Hermitian, max |M - M†| = " << herm_dev;
        throw PreconditionError(os.str());
    }

    ComplexMatrix a = m;
    // Eigenvectors accumulate as rows of the transposed factor so the plane
    // rotations stay unit-stride.
    ComplexMatrix qt = ComplexMatrix::identity(n);
    const double fro = frobenius_norm(a);
    // Elements below this cannot push the off-diagonal mass over the
    // convergence target, so late sweeps skip almost all pairs.
    const double skip = n > 0 ? kConvergence * fro / (2.0 * static_cast<double>(n)) : 0.0;

    for (int sweep = 0; sweep < kMaxSweeps && n > 1; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) off += std::norm(a(p, r));
        }
        if (std::sqrt(2.0 * off) <= kConvergence * fro) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                const cplx beta = a(p, r);
                if (std::abs(beta) <= skip) continue;
                auto [c, sigma] = jacobi_rotation(a(p, p).real(), a(r, r).real(), beta);
                // rows p, r:  A <- J† A  (contiguous)
                kernels::rot(n, a.row(p), a.row(r), c, -sigma);
                // columns p, r of A J: the 2x2 block explicitly, the rest by
                // hermiticity from the updated rows
                const cplx msconj = -std::conj(sigma);
                const cplx bpp = a(p, p), bpr = a(p, r), brp = a(r, p), brr = a(r, r);
                a(p, p) = c * bpp + msconj * bpr;
                a(r, p) = c * brp + msconj * brr;
                a(p, r) = sigma * bpp + c * bpr;
                a(r, r) = sigma * brp + c * brr;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == r) continue;
                    a(i, p) = std::conj(a(p, i));
                    a(i, r) = std::conj(a(r, i));
                }
                kernels::rot(n, qt.row(p), qt.row(r), c, msconj);
                a(p, r) = a(r, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(r, r) = a(r, r).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    Eigensystem es;
    es.values.resize(n);
    es.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        es.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = qt(order[k], i);
    }
    return es;
}

std::vector<double> singular_values(const ComplexMatrix &m) {
    if (!m.all_finite()) throw PreconditionError("singular_values: non-finite entries");
    if (m.size() == 0) return {};
    // Orthogonalize the columns of the taller orientation by one-sided Jacobi.
    // Rows of `t` are those columns, giving unit-stride kernel calls.
    const ComplexMatrix *src = &m;
    ComplexMatrix adj;
    if (m.rows() < m.cols()) {
        adj = adjoint(m);
        src = &adj;
    }
    const std::size_t cols = src->cols(), rows = src->rows();
    ComplexMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*src)(i, j);
    }

    std::vector<double> norms(cols);
    for (std::size_t j = 0; j < cols; ++j) norms[j] = kernels::nrm2sq(rows, t.row(j));

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool converged = true;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t r = p + 1; r < cols; ++r) {
                const double gpp = norms[p], grr = norms[r];
                if (gpp == 0.0 || grr == 0.0) continue;
                const cplx gpr = kernels::cdotc(rows, t.row(p), t.row(r));
                if (std::abs(gpr) <= kConvergence * std::sqrt(gpp * grr)) continue;
                converged = false;
                auto [c, sigma] = jacobi_rotation(gpp, grr, gpr);
                kernels::rot(rows, t.row(p), t.row(r), c, -std::conj(sigma));
                norms[p] = kernels::nrm2sq(rows, t.row(p));
                norms[r] = kernels::nrm2sq(rows, t.row(r));
            }
        }
        if (converged) break;
    }

    std::vector<double> sv(cols);
    for (std::size_t j = 0; j < cols; ++j) sv[j] = std::sqrt(kernels::nrm2sq(rows, t.row(j)));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double operator_norm(const ComplexMatrix &m) {
    auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
}

double trace_norm(const ComplexMatrix &m) {
    auto sv = singular_values(m);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

} // namespace ttnrep
