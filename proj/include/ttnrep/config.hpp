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

#include <cstddef>
#include <cstdint>

namespace ttnrep {

/// Central tolerance record. Every module reads its thresholds from here so
/// that a run can tighten or relax them in one place.
struct Tolerances {
    double spectra = 1e-10;        ///< Hermiticity / projector / norm identities.
    double isometry = 1e-12;       ///< V†V = I and norm-preservation checks.
    double eigenvalue_one = 1e-9;  ///< Counting unit eigenvalues of the overlap product.
    double condition = 1e-9;       ///< Margin below 1 required to certify the condition.
    double underflow_floor = 1e-300; ///< Below this a decay value is reported as exact 0.
};

/// Resource budget for tensor contractions.
struct ContractionLimits {
    /// Largest admissible state-vector dimension d^{|partition|}.
    std::uint64_t max_state_dim = std::uint64_t{1} << 24;
};

inline constexpr std::size_t kMinSiteDim = 2;
inline constexpr std::size_t kMaxSiteDim = 8;

} // namespace ttnrep
