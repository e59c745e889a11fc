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

#include "ttnrep/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ttnrep/errors.hpp"

namespace ttnrep {
namespace {

using i128 = __int128;

constexpr std::uint32_t kMaxExp = 62;
constexpr i128 kNumMin = std::numeric_limits<std::int64_t>::min();
constexpr i128 kNumMax = std::numeric_limits<std::int64_t>::max();

// Canonicalize num / 2^exp with a wide numerator: strip factors of two,
// then range-check. 128-bit intermediates make overflow detection a plain
// comparison instead of pre-checked shifts.
DyadicRational make_checked(i128 num, std::int64_t exp) {
    if (num == 0) return DyadicRational::zero();
    while ((num & 1) == 0 && exp > 0) {
        num >>= 1;
        --exp;
    }
    while (exp < 0) {
        num <<= 1;
        ++exp;
        if (num < kNumMin || num > kNumMax) throw OverflowError("dyadic numerator overflow");
    }
    if (num < kNumMin || num > kNumMax) throw OverflowError("dyadic numerator overflow");
    if (exp > kMaxExp) throw OverflowError("dyadic exponent exceeds 62");
    return DyadicRational(static_cast<std::int64_t>(num), static_cast<std::uint32_t>(exp));
}

} // namespace

DyadicRational::DyadicRational(std::int64_t num, std::uint32_t exp) : num_(num), exp_(exp) {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while ((num_ & 1) == 0 && exp_ > 0) {
        num_ /= 2;
        --exp_;
    }
    if (exp_ > kMaxExp) throw OverflowError("dyadic exponent exceeds 62");
}

double DyadicRational::to_double() const { return std::ldexp(static_cast<double>(num_), -static_cast<int>(exp_)); }

std::string DyadicRational::to_string() const {
    if (exp_ == 0) return std::to_string(num_);
    std::ostringstream os;
    os << num_ << "/" << (std::uint64_t{1} << exp_);
    return os.str();
}

std::optional<DyadicRational> DyadicRational::parse(const std::string &text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t pos = 0;
            long long v = std::stoll(text, &pos);
            if (pos != text.size()) return std::nullopt;
            return DyadicRational(v, 0);
        }
        std::size_t pn = 0, pd = 0;
        const std::string nums = text.substr(0, slash), dens = text.substr(slash + 1);
        long long n = std::stoll(nums, &pn);
        unsigned long long den = std::stoull(dens, &pd);
        if (pn != nums.size() || pd != dens.size()) return std::nullopt;
        if (den == 0 || (den & (den - 1)) != 0) return std::nullopt; // power of two only
        std::uint32_t e = 0;
        while ((den >> e) != 1) ++e;
        return DyadicRational(n, e);
    } catch (const std::exception &) {
        return std::nullopt;
    }
}

DyadicRational operator+(DyadicRational a, DyadicRational b) {
    const std::uint32_t e = std::max(a.exp_, b.exp_);
    const i128 na = i128(a.num_) << (e - a.exp_);
    const i128 nb = i128(b.num_) << (e - b.exp_);
    return make_checked(na + nb, e);
}

DyadicRational operator-(DyadicRational a, DyadicRational b) { return a + (-b); }

DyadicRational operator-(DyadicRational a) {
    if (a.num_ == std::numeric_limits<std::int64_t>::min())
        throw OverflowError("dyadic numerator overflow");
    a.num_ = -a.num_;
    return a;
}

DyadicRational operator*(DyadicRational a, DyadicRational b) {
    return make_checked(i128(a.num_) * i128(b.num_),
                        std::int64_t(a.exp_) + std::int64_t(b.exp_));
}

DyadicRational DyadicRational::times_pow2(std::int32_t s) const {
    return make_checked(i128(num_), std::int64_t(exp_) - s);
}

std::strong_ordering operator<=>(DyadicRational a, DyadicRational b) {
    const std::uint32_t e = std::max(a.exp_, b.exp_);
    const i128 na = i128(a.num_) << (e - a.exp_);
    const i128 nb = i128(b.num_) << (e - b.exp_);
    if (na < nb) return std::strong_ordering::less;
    if (na > nb) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

StandardDyadicInterval::StandardDyadicInterval(std::uint64_t p, std::uint32_t n) : p_(p), n_(n) {
    if (n > kMaxExp) throw OverflowError("interval level exceeds 62");
    if (p >= (std::uint64_t{1} << n)) throw PreconditionError("interval outside [0,1]: p >= 2^n");
}

DyadicRational StandardDyadicInterval::left() const {
    return DyadicRational(static_cast<std::int64_t>(p_), n_);
}

DyadicRational StandardDyadicInterval::right() const {
    return DyadicRational(static_cast<std::int64_t>(p_) + 1, n_);
}

DyadicRational StandardDyadicInterval::midpoint() const {
    if (n_ + 1 > kMaxExp) throw OverflowError("midpoint exponent exceeds 62");
    return DyadicRational(2 * static_cast<std::int64_t>(p_) + 1, n_ + 1);
}

StandardDyadicInterval StandardDyadicInterval::left_child() const {
    return StandardDyadicInterval(2 * p_, n_ + 1);
}

StandardDyadicInterval StandardDyadicInterval::right_child() const {
    return StandardDyadicInterval(2 * p_ + 1, n_ + 1);
}

StandardDyadicInterval StandardDyadicInterval::parent() const {
    if (n_ == 0) throw PreconditionError("[0,1] has no parent interval");
    return StandardDyadicInterval(p_ / 2, n_ - 1);
}

bool StandardDyadicInterval::contains(const StandardDyadicInterval &other) const {
    return n_ <= other.n_ && (other.p_ >> (other.n_ - n_)) == p_;
}

bool StandardDyadicInterval::siblings(const StandardDyadicInterval &a,
                                      const StandardDyadicInterval &b) {
    return a.n_ == b.n_ && a.n_ > 0 && (a.p_ & 1) == 0 && b.p_ == a.p_ + 1;
}

bool is_standard(DyadicRational a, DyadicRational b) {
    return as_standard_interval(a, b).has_value();
}

std::optional<StandardDyadicInterval> as_standard_interval(DyadicRational a, DyadicRational b) {
    if (!(a < b) || a < DyadicRational::zero() || b > DyadicRational::one()) return std::nullopt;
    const DyadicRational len = b - a;
    if (len.num() != 1) return std::nullopt; // length must be 1/2^n
    const std::uint32_t n = len.exp();
    if (a.exp() > n) return std::nullopt; // left endpoint finer than the grid
    const std::int64_t p = a.num() << (n - a.exp());
    return StandardDyadicInterval(static_cast<std::uint64_t>(p), n);
}

DyadicPartition DyadicPartition::from_intervals(std::vector<StandardDyadicInterval> intervals) {
    if (intervals.empty()) throw PreconditionError("partition must be nonempty");
    if (intervals.front().left() != DyadicRational::zero())
        throw PreconditionError("partition must start at 0");
    for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
        if (intervals[i].right() != intervals[i + 1].left())
            throw PreconditionError("partition has a gap or overlap");
    }
    if (intervals.back().right() != DyadicRational::one())
        throw PreconditionError("partition must end at 1");
    DyadicPartition p;
    p.intervals_ = std::move(intervals);
    return p;
}

DyadicPartition DyadicPartition::from_breakpoints(const std::vector<DyadicRational> &interior) {
    std::vector<DyadicRational> pts;
    pts.push_back(DyadicRational::zero());
    pts.insert(pts.end(), interior.begin(), interior.end());
    pts.push_back(DyadicRational::one());
    std::vector<StandardDyadicInterval> ivs;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        auto iv = as_standard_interval(pts[i], pts[i + 1]);
        if (!iv) throw PreconditionError("breakpoints do not delimit standard dyadic intervals");
        ivs.push_back(*iv);
    }
    return from_intervals(std::move(ivs));
}

DyadicPartition DyadicPartition::trivial() {
    return from_intervals({StandardDyadicInterval(0, 0)});
}

DyadicPartition DyadicPartition::uniform(std::uint32_t k) {
    if (k > kMaxExp) throw OverflowError("uniform partition level exceeds 62");
    if (k > 22) throw SizeLimitError("uniform partition with 2^k > 2^22 intervals");
    std::vector<StandardDyadicInterval> ivs;
    ivs.reserve(std::size_t{1} << k);
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << k); ++p) ivs.emplace_back(p, k);
    return from_intervals(std::move(ivs));
}

std::vector<DyadicRational> DyadicPartition::breakpoints() const {
    std::vector<DyadicRational> b;
    for (std::size_t i = 0; i + 1 < intervals_.size(); ++i) b.push_back(intervals_[i].right());
    return b;
}

std::vector<DyadicRational> DyadicPartition::midpoints() const {
    std::vector<DyadicRational> m;
    m.reserve(intervals_.size());
    for (const auto &iv : intervals_) m.push_back(iv.midpoint());
    return m;
}

std::uint32_t DyadicPartition::depth() const {
    std::uint32_t d = 0;
    for (const auto &iv : intervals_) d = std::max(d, iv.n());
    return d;
}

std::size_t DyadicPartition::locate(DyadicRational t) const {
    if (t < DyadicRational::zero() || !(t < DyadicRational::one()))
        throw PreconditionError("locate: t must lie in [0, 1)");
    std::size_t lo = 0, hi = intervals_.size();
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (t < intervals_[mid].left()) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return lo;
}

bool refines(const DyadicPartition &coarse, const DyadicPartition &fine) {
    // Both tile [0,1], so refinement is containment of breakpoint sets.
    std::size_t j = 0;
    for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
        const DyadicRational b = coarse[i].right();
        while (j + 1 < fine.size() && fine[j].right() < b) ++j;
        if (j + 1 >= fine.size() || fine[j].right() != b) return false;
        ++j;
    }
    return true;
}

DyadicPartition common_refinement(const DyadicPartition &a, const DyadicPartition &b) {
    std::vector<DyadicRational> pts;
    for (const auto &iv : a.intervals()) pts.push_back(iv.right());
    for (const auto &iv : b.intervals()) pts.push_back(iv.right());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<StandardDyadicInterval> ivs;
    DyadicRational prev = DyadicRational::zero();
    for (const auto &pt : pts) {
        auto iv = as_standard_interval(prev, pt);
        // Consecutive endpoints of two standard tilings always cut out the
        // smaller of the two overlapping intervals, which is standard.
        if (!iv) throw PreconditionError("common refinement produced a non-standard interval");
        ivs.push_back(*iv);
        prev = pt;
    }
    return DyadicPartition::from_intervals(std::move(ivs));
}

} // namespace ttnrep
