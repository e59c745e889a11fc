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

#include <cstdint>
#include <vector>

#include "ttnrep/diagnostics.hpp"
#include "ttnrep/linalg.hpp"

namespace ttnrep {

/// Cyclic shift X|j> = |j+1 mod d>.
ComplexMatrix pauli_x(std::size_t d);
/// Phase Z|j> = w^j |j> with w = exp(2 pi i / d).
ComplexMatrix pauli_z(std::size_t d);

/// Isometry whose image is the fixed subspace of the stabilizer X (x) Z
/// (dimension d). The column basis is the deterministic orthonormalization
/// of the stabilizer projector's columns in index order.
Isometry pauli_stabilizer_isometry(std::size_t d);

/// The d = 3 rotation-equivariant isometry: coarse basis (|1>,|0>,|-1>)
/// mapped onto the antisymmetric two-site combinations, entries 0, ±1/√2.
Isometry so3_isometry();

/// Angular momentum matrices for the three-level system, basis (|1>,|0>,|-1>).
ComplexMatrix spin1_jx();
ComplexMatrix spin1_jy();
ComplexMatrix spin1_jz();

/// exp(i theta H) for Hermitian H, through the eigensystem.
ComplexMatrix unitary_exp_i(const ComplexMatrix &h, double theta);

/// ||V - (U (x) U) V U†||; zero certifies equivariance under U.
double check_symmetry(const Isometry &v, const ComplexMatrix &u, double unitarity_tol = 1e-10);

struct EnsembleConfig {
    std::size_t d = 2;
    std::size_t num_samples = 1;
    std::uint64_t base_seed = 0;
    std::size_t kmax = 8;
    Tolerances tolerances;
};

/// Samples num_samples Haar isometries at seeds base_seed .. base_seed+n-1
/// and runs the full diagnostics on each. Parallel over seeds (capped by
/// DYADIC_LIMIT_THREADS); reports are returned in seed order regardless of
/// scheduling.
std::vector<DiagnosticsReport> genericity_scan(const EnsembleConfig &cfg);

struct ScanSummary {
    std::size_t condition_failures = 0; ///< samples with intersection_dim > 0 or det <= 0
    double min_margin = 1.0;            ///< min over samples of 1 - ||(I(x)P)(P(x)I)||
};

ScanSummary summarize_scan(const std::vector<DiagnosticsReport> &reports);

} // namespace ttnrep
