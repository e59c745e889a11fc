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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ttnrep {

/// Exact dyadic rational num / 2^exp. Canonical form: num odd or zero, and
/// exp == 0 when num == 0. Arithmetic never rounds; results that do not fit
/// (|num| >= 2^63 or exp > 62) raise OverflowError.
class DyadicRational {
  public:
    constexpr DyadicRational() = default;
    /// Normalizes; throws OverflowError if the canonical exponent exceeds 62.
    DyadicRational(std::int64_t num, std::uint32_t exp);

    static DyadicRational zero() { return {}; }
    static DyadicRational one() { return DyadicRational(1, 0); }
    static DyadicRational half() { return DyadicRational(1, 1); }
    /// 1 / 2^k
    static DyadicRational pow2(std::uint32_t k) { return DyadicRational(1, k); }

    std::int64_t num() const { return num_; }
    std::uint32_t exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }

    double to_double() const;
    std::string to_string() const;
    /// Parses "p", "-p" or "p/q" with q a power of two.
    static std::optional<DyadicRational> parse(const std::string &text);

    friend DyadicRational operator+(DyadicRational a, DyadicRational b);
    friend DyadicRational operator-(DyadicRational a, DyadicRational b);
    friend DyadicRational operator-(DyadicRational a);
    friend DyadicRational operator*(DyadicRational a, DyadicRational b);
    /// Exact multiplication by 2^s (s may be negative).
    DyadicRational times_pow2(std::int32_t s) const;

    friend bool operator==(DyadicRational a, DyadicRational b) = default;
    friend std::strong_ordering operator<=>(DyadicRational a, DyadicRational b);

  private:
    std::int64_t num_ = 0;
    std::uint32_t exp_ = 0;
};

/// The interval [p/2^n, (p+1)/2^n] with 0 <= p < 2^n.
class StandardDyadicInterval {
  public:
    StandardDyadicInterval(std::uint64_t p, std::uint32_t n);

    std::uint64_t p() const { return p_; }
    std::uint32_t n() const { return n_; }

    DyadicRational left() const;
    DyadicRational right() const;
    DyadicRational midpoint() const;
    DyadicRational length() const { return DyadicRational::pow2(n_); }

    StandardDyadicInterval left_child() const;
    StandardDyadicInterval right_child() const;
    StandardDyadicInterval parent() const; // throws if n == 0
    bool is_left_child() const { return (p_ & 1) == 0; }

    /// True if `other` lies inside this interval (possibly equal).
    bool contains(const StandardDyadicInterval &other) const;
    /// Two standard intervals are siblings when they are the two halves of
    /// one standard interval, given in order.
    static bool siblings(const StandardDyadicInterval &a, const StandardDyadicInterval &b);

    friend bool operator==(const StandardDyadicInterval &, const StandardDyadicInterval &) =
        default;

  private:
    std::uint64_t p_;
    std::uint32_t n_;
};

/// True iff [a, b] is a standard dyadic interval.
bool is_standard(DyadicRational a, DyadicRational b);
/// The same test, returning the interval when it exists.
std::optional<StandardDyadicInterval> as_standard_interval(DyadicRational a, DyadicRational b);

/// An ordered tiling of [0,1] by standard dyadic intervals.
class DyadicPartition {
  public:
    /// Validates the tiling (throws PreconditionError on gaps/overlaps).
    static DyadicPartition from_intervals(std::vector<StandardDyadicInterval> intervals);
    /// Builds from interior breakpoints (0 and 1 implied).
    static DyadicPartition from_breakpoints(const std::vector<DyadicRational> &interior);

    static DyadicPartition trivial();
    /// 2^k equal intervals. Throws SizeLimitError for k > 22, OverflowError for k > 62.
    static DyadicPartition uniform(std::uint32_t k);

    std::size_t size() const { return intervals_.size(); }
    const StandardDyadicInterval &operator[](std::size_t i) const { return intervals_[i]; }
    const std::vector<StandardDyadicInterval> &intervals() const { return intervals_; }

    std::vector<DyadicRational> breakpoints() const; // interior endpoints
    std::vector<DyadicRational> midpoints() const;   // site locations
    std::uint32_t depth() const;                     // max interval level

    /// Index of the interval containing t in [left, right); requires t in [0,1).
    std::size_t locate(DyadicRational t) const;

    friend bool operator==(const DyadicPartition &, const DyadicPartition &) = default;

  private:
    std::vector<StandardDyadicInterval> intervals_;
};

/// True iff every interval of `coarse` is a union of consecutive intervals
/// of `fine`.
bool refines(const DyadicPartition &coarse, const DyadicPartition &fine);

/// The coarsest partition refining both: endpoint-set union.
DyadicPartition common_refinement(const DyadicPartition &a, const DyadicPartition &b);

} // namespace ttnrep
