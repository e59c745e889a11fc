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
#include <string>
#include <vector>

#include "ttnrep/config.hpp"
#include "ttnrep/linalg.hpp"

namespace ttnrep {

/// Per-isometry continuity diagnostics.
struct DiagnosticsReport {
    std::size_t d = 0;
    std::string source;            ///< provenance tag, e.g. "haar:seed=7", "so3"
    double norm_x = 0.0;           ///< ||overlap operator||
    double norm_cross = 0.0;       ///< ||(I(x)P)(P(x)I)||, the certificate norm
    double norm_gamma = 0.0;       ///< ||Gamma_P|| = norm_cross^2
    std::size_t intersection_dim = 0;
    double genericity_det = 0.0;   ///< det(I - Gamma_P)
    bool condition_holds = false;  ///< norm_gamma < 1 - tol
    bool certificate = false;      ///< norm_cross < 1 - tol (weak discontinuity certified)
    double margin = 0.0;           ///< 1 - norm_cross
    std::vector<double> decay_series;        ///< ||R^{k}(x)|| for k = 0..kmax
    std::int64_t underflow_from = -1;        ///< first k reported as exact 0, or -1
    std::vector<cplx> melement_series;       ///< M_k for k = 1..kmax (transfer route)
};

/// The overlap operator (I (x) V†)(V (x) I) on C^d (x) C^d. Its norm is < 1
/// exactly when the image subspace meets its one-site translate trivially.
ComplexMatrix overlap_operator(const Isometry &v);

/// One coarse-graining step of the rotated overlap network:
/// R(z) = (I (x) V†)(z (x) I)(I (x) z)(V (x) I), quadratic in z.
ComplexMatrix renorm_map(const ComplexMatrix &z, const Isometry &v);

/// ||R^{k}(x)|| for k = 0..kmax (kmax <= 12). Values below the underflow
/// floor are reported as exact 0; `underflow_from` (if not null) receives the
/// first such k or -1.
std::vector<double> decay_series(const Isometry &v, std::size_t kmax,
                                 std::int64_t *underflow_from = nullptr,
                                 const Tolerances &tol = {});

/// (P (x) I)(I (x) P)(P (x) I) on (C^d)^{(x)3} for a d^2 x d^2 projector P.
ComplexMatrix gamma_operator(const ComplexMatrix &p, std::size_t d,
                             const Tolerances &tol = {});

/// Multiplicity of eigenvalue 1 of gamma_operator(VV†): the dimension of the
/// intersection of the shifted image subspaces.
std::size_t intersection_dimension(const Isometry &v, const Tolerances &tol = {});

/// det(I - Gamma_P), computed from the spectrum; zero exactly on the
/// non-generic set, strictly positive for generic isometries.
double genericity_polynomial(const Isometry &v, const Tolerances &tol = {});

/// The k-independent boundary operator A(phi, psi) pairing the renormalized
/// overlap iterate with the rotation matrix element:
///   Tr(R^{k-1}(x) A(phi,psi)) = rotation_matrix_element(V, phi, psi, k).
/// The factor ordering and conjugation convention were pinned against the
/// brute-force oracle at k = 1 and 2 and are frozen here.
ComplexMatrix boundary_operator(const StateVector &phi, const StateVector &psi, std::size_t d);

/// Evaluates the rotation matrix element through the renormalization
/// identity; cost linear in k, so it reaches far beyond brute force.
cplx transfer_matrix_element(const Isometry &v, const StateVector &phi, const StateVector &psi,
                             std::uint32_t k);

/// The whole series M_1..M_kmax in one sweep, along with the Hoelder bounds
/// ||R^{k-1}(x)|| * ||A||_1 taken from the same iterates (not floored).
struct MelementSeries {
    std::vector<std::uint32_t> ks;
    std::vector<cplx> values;
    std::vector<double> bounds;
};
MelementSeries transfer_series(const Isometry &v, const StateVector &phi, const StateVector &psi,
                               std::uint32_t kmax);

struct Certificate {
    bool holds = false;   ///< true: weak discontinuity certified
    double margin = 0.0;  ///< 1 - ||(I(x)P)(P(x)I)||
};

/// Weak-discontinuity certificate: holds when ||(I(x)P)(P(x)I)|| < 1 - tol.
/// A false result is inconclusive, not a continuity certificate.
Certificate discontinuity_certificate(const Isometry &v, const Tolerances &tol = {});

/// Runs the full battery on one isometry.
DiagnosticsReport run_diagnostics(const Isometry &v, const std::string &source,
                                  std::size_t kmax = 8, const Tolerances &tol = {});

} // namespace ttnrep
