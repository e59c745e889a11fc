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

#include "ttnrep/ensembles.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "ttnrep/errors.hpp"
#include "ttnrep/kernels.hpp"

namespace ttnrep {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::size_t scan_threads(std::size_t samples) {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char *env = std::getenv("DYADIC_LIMIT_THREADS")) {
        const long cap = std::atol(env);
        if (cap >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
    }
    return std::min(n, samples);
}

} // namespace

ComplexMatrix pauli_x(std::size_t d) {
    ComplexMatrix x(d, d);
    for (std::size_t j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
    return x;
}

ComplexMatrix pauli_z(std::size_t d) {
    ComplexMatrix z(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(d);
        z(j, j) = cplx(std::cos(a), std::sin(a));
    }
    return z;
}

Isometry pauli_stabilizer_isometry(std::size_t d) {
    if (d < kMinSiteDim) throw PreconditionError("stabilizer isometry requires d >= 2");
    if (d > kMaxSiteDim) throw PreconditionError("stabilizer isometry requires d <= 8");
    const std::size_t dim = d * d;
    const ComplexMatrix s = kron(pauli_x(d), pauli_z(d));

    // Projector onto the fixed subspace: average of the cyclic group <S>.
    ComplexMatrix proj = ComplexMatrix::identity(dim);
    ComplexMatrix power = ComplexMatrix::identity(dim);
    for (std::size_t k = 1; k < d; ++k) {
        power = matmul(s, power);
        proj = add(proj, power);
    }
    proj = scale(proj, 1.0 / static_cast<double>(d));

    // Deterministic basis: orthonormalize the projector columns in index
    // order, keeping the independent ones.
    std::vector<std::vector<cplx>> basis;
    for (std::size_t j = 0; j < dim && basis.size() < d; ++j) {
        std::vector<cplx> col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = proj(i, j);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &q : basis) {
                const cplx ov = kernels::cdotc(dim, q.data(), col.data());
                kernels::axpy(dim, -ov, q.data(), col.data());
            }
        }
        const double nrm = std::sqrt(kernels::nrm2sq(dim, col.data()));
        if (nrm > 1e-6) {
            kernels::scal(dim, 1.0 / nrm, col.data());
            basis.push_back(std::move(col));
        }
    }
    if (basis.size() != d) {
        throw PreconditionError("stabilizer subspace dimension differs from d");
    }
    ComplexMatrix v(dim, d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < dim; ++i) v(i, j) = basis[j][i];
    }
    return Isometry::from_matrix(d, std::move(v));
}

Isometry so3_isometry() {
    ComplexMatrix v(9, 3);
    v(1, 0) = kInvSqrt2;  // |1,0>
    v(3, 0) = -kInvSqrt2; // |0,1>
    v(2, 1) = kInvSqrt2;  // |1,-1>
    v(6, 1) = -kInvSqrt2; // |-1,1>
    v(5, 2) = kInvSqrt2;  // |0,-1>
    v(7, 2) = -kInvSqrt2; // |-1,0>
    return Isometry::from_matrix(3, std::move(v), 1e-15);
}

ComplexMatrix spin1_jz() {
    ComplexMatrix jz(3, 3);
    jz(0, 0) = 1.0;
    jz(2, 2) = -1.0;
    return jz;
}

ComplexMatrix spin1_jx() {
    ComplexMatrix jx(3, 3);
    jx(0, 1) = jx(1, 0) = jx(1, 2) = jx(2, 1) = kInvSqrt2;
    return jx;
}

ComplexMatrix spin1_jy() {
    ComplexMatrix jy(3, 3);
    const cplx mi(0.0, -kInvSqrt2);
    jy(0, 1) = jy(1, 2) = mi;
    jy(1, 0) = jy(2, 1) = -mi;
    return jy;
}

ComplexMatrix unitary_exp_i(const ComplexMatrix &h, double theta) {
    const Eigensystem es = hermitian_eigensystem(h);
    const std::size_t n = h.rows();
    ComplexMatrix u(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx ph(std::cos(theta * es.values[k]), std::sin(theta * es.values[k]));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                u(i, j) += ph * es.vectors(i, k) * std::conj(es.vectors(j, k));
            }
        }
    }
    return u;
}

double check_symmetry(const Isometry &v, const ComplexMatrix &u, double unitarity_tol) {
    if (u.rows() != v.d() || u.cols() != v.d()) {
        throw PreconditionError("check_symmetry: U must act on C^d");
    }
    const ComplexMatrix gram = matmul(adjoint(u), u);
    if (max_abs(subtract(gram, ComplexMatrix::identity(v.d()))) > unitarity_tol) {
        throw PreconditionError("check_symmetry: U is not unitary");
    }
    const ComplexMatrix conjugated = matmul(kron(u, u), matmul(v.matrix(), adjoint(u)));
    return operator_norm(subtract(v.matrix(), conjugated));
}

std::vector<DiagnosticsReport> genericity_scan(const EnsembleConfig &cfg) {
    if (cfg.num_samples < 1) throw PreconditionError("scan requires num_samples >= 1");
    if (cfg.d < kMinSiteDim || cfg.d > kMaxSiteDim) {
        throw PreconditionError("scan requires d in [2, 8]");
    }
    std::vector<DiagnosticsReport> reports(cfg.num_samples);
    const std::size_t workers = scan_threads(cfg.num_samples);

    auto work = [&](std::size_t worker) {
        for (std::size_t i = worker; i < cfg.num_samples; i += workers) {
            const std::uint64_t seed = cfg.base_seed + i;
            const Isometry v = haar_isometry(cfg.d, seed);
            reports[i] = run_diagnostics(v, "haar:seed=" + std::to_string(seed), cfg.kmax,
                                         cfg.tolerances);
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto &t : pool) t.join();
    }
    return reports;
}

ScanSummary summarize_scan(const std::vector<DiagnosticsReport> &reports) {
    ScanSummary s;
    for (const auto &rep : reports) {
        if (rep.intersection_dim != 0 || rep.genericity_det <= 0.0) ++s.condition_failures;
        s.min_margin = std::min(s.min_margin, rep.margin);
    }
    return s;
}

} // namespace ttnrep
