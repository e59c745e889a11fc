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
#include <utility>
#include <vector>

#include "ttnrep/dyadic.hpp"

namespace ttnrep {

/// A piecewise-affine orientation-preserving circle homeomorphism with dyadic
/// breakpoints and power-of-two slopes, stored as a pair of equal-size
/// standard dyadic partitions plus a cyclic offset: the i-th domain interval
/// maps affinely onto the ((i + offset) mod L)-th range interval.
///
/// Elements are kept in canonical (coarsest) form: sibling interval pairs
/// whose images are again sibling pairs are merged, so equality of elements
/// is structural equality.
class ThompsonElement {
  public:
    static ThompsonElement identity();
    /// t |-> t + 1/2^k mod 1 on the uniform level-k partition, k >= 1.
    static ThompsonElement rotation(std::uint32_t k);
    /// Validates |domain| == |range| and offset < |domain|, then canonicalizes.
    static ThompsonElement from_parts(DyadicPartition domain, DyadicPartition range,
                                      std::size_t offset);

    const DyadicPartition &domain() const { return domain_; }
    const DyadicPartition &range() const { return range_; }
    std::size_t offset() const { return offset_; }
    std::size_t pieces() const { return domain_.size(); }

    bool is_identity() const { return domain_.size() == 1 && offset_ == 0; }

    /// Image of the standard interval `k`; requires that `k` lies inside one
    /// affine piece (i.e. domain() ⪯ any partition containing k).
    StandardDyadicInterval image_of(const StandardDyadicInterval &k) const;
    /// Preimage of `c`; requires that `c` lies inside one range interval.
    StandardDyadicInterval preimage_of(const StandardDyadicInterval &c) const;

    friend bool operator==(const ThompsonElement &, const ThompsonElement &) = default;

  private:
    ThompsonElement(DyadicPartition d, DyadicPartition r, std::size_t off)
        : domain_(std::move(d)), range_(std::move(r)), offset_(off) {}

    friend ThompsonElement compose(const ThompsonElement &, const ThompsonElement &);
    static ThompsonElement detail_from_pairs(
        std::vector<std::pair<StandardDyadicInterval, StandardDyadicInterval>> pairs);

    DyadicPartition domain_ = DyadicPartition::trivial();
    DyadicPartition range_ = DyadicPartition::trivial();
    std::size_t offset_ = 0;
};

/// Exact image of t in [0,1) under the piecewise-affine map.
DyadicRational evaluate(const ThompsonElement &f, DyadicRational t);

/// f after g: evaluate(compose(f,g), t) == evaluate(f, evaluate(g, t)).
ThompsonElement compose(const ThompsonElement &f, const ThompsonElement &g);

ThompsonElement inverse(const ThompsonElement &f);

/// sup_t of the circle distance d(f(t), t), d(x,y) = min(|x-y|, 1-|x-y|).
/// Attained at a breakpoint or where the displacement crosses 1/2, so it is
/// computed exactly.
DyadicRational circle_distance_to_identity(const ThompsonElement &f);

/// The coarsest partition J with I ⪯ J, domain(f) ⪯ J; f is affine on each
/// interval of J and f(J) is again a standard dyadic partition.
DyadicPartition refine_for(const ThompsonElement &f, const DyadicPartition &I);

} // namespace ttnrep
