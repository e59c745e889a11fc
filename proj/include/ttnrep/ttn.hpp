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

#include "ttnrep/config.hpp"
#include "ttnrep/dyadic.hpp"
#include "ttnrep/linalg.hpp"
#include "ttnrep/thompson.hpp"

namespace ttnrep {

/// A finite-scale representative: a partition I and a vector in
/// (C^d)^{(x)|I|}, with tensor factors ordered by interval left endpoints.
/// Two representatives describe the same state of the scale-free limit when
/// they agree after fine-graining to a common partition.
struct ScaleState {
    std::size_t d = 0;
    DyadicPartition partition = DyadicPartition::trivial();
    StateVector vector;

    ScaleState() = default;
    /// Validates dim == d^{|partition|}.
    ScaleState(std::size_t d, DyadicPartition partition, StateVector vector);
};

/// d^k, guarded against the contraction limit.
std::uint64_t pow_checked(std::size_t d, std::size_t k, const ContractionLimits &limits);

/// The fine-graining map C^d -> (C^d)^{(x)|I|} obtained by placing V at each
/// internal node of the unique midpoint-split binary tree over I. Returned
/// as a dense d^{|I|} x d matrix (an isometry).
ComplexMatrix tree_isometry(const Isometry &v, const DyadicPartition &I,
                            const ContractionLimits &limits = {});

/// Fine-grains s from its partition to J (requires refines(s.partition, J))
/// by splitting one site at a time; preserves norms exactly up to rounding.
ScaleState refine_state(const ScaleState &s, const DyadicPartition &J, const Isometry &v,
                        const ContractionLimits &limits = {});

/// Inner product of equivalence classes: fine-grain both representatives to
/// the common refinement and contract. Conjugate-linear in the first slot.
cplx inner_product(const ScaleState &s1, const ScaleState &s2, const Isometry &v,
                   const ContractionLimits &limits = {});

/// The unitary action of f: refine until f maps the partition to a standard
/// dyadic partition, then move the factor living on interval K to f(K).
ScaleState apply_thompson(const ThompsonElement &f, const ScaleState &s, const Isometry &v,
                          const ContractionLimits &limits = {});

/// Brute-force <Phi, rho(rotation(k)) Psi> for the classes of the trivial-
/// partition representatives phi, psi in C^d: fine-grain both to the uniform
/// level-k partition and contract against the one-site cyclic shift. This is
/// the oracle the transfer-formula evaluation is checked against.
cplx rotation_matrix_element(const Isometry &v, const StateVector &phi, const StateVector &psi,
                             std::uint32_t k, const ContractionLimits &limits = {});

namespace detail {
/// Both one-site shift contractions. `rotate_left` moves factor contents
/// forward along the circle; the public oracle fixes the direction that the
/// renormalization identity reproduces (see rotation_matrix_element).
cplx shift_contraction(const Isometry &v, const StateVector &phi, const StateVector &psi,
                       std::uint32_t k, bool rotate_left, const ContractionLimits &limits = {});
} // namespace detail

} // namespace ttnrep
