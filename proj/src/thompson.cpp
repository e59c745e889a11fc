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

#include "ttnrep/thompson.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "ttnrep/errors.hpp"

namespace ttnrep {
namespace {

using Pair = std::pair<StandardDyadicInterval, StandardDyadicInterval>;

// An affine map between two standard intervals has slope 2^(from.n - to.n);
// it sends standard subintervals to standard subintervals.
StandardDyadicInterval map_affine(const StandardDyadicInterval &from,
                                  const StandardDyadicInterval &to,
                                  const StandardDyadicInterval &k) {
    const std::int32_t shift = static_cast<std::int32_t>(from.n()) - static_cast<std::int32_t>(to.n());
    const DyadicRational a = to.left() + (k.left() - from.left()).times_pow2(shift);
    const DyadicRational b = to.left() + (k.right() - from.left()).times_pow2(shift);
    auto iv = as_standard_interval(a, b);
    if (!iv) throw PreconditionError("affine image is not a standard interval");
    return *iv;
}

// Merge sibling pairs whose images are sibling pairs, to a fixpoint. This is
// the caret-cancellation of the tree-pair picture and yields the unique
// coarsest representative. Stack reduction keeps it linear.
void canonicalize(std::vector<Pair> &pairs) {
    std::vector<Pair> out;
    out.reserve(pairs.size());
    for (auto &pr : pairs) {
        out.push_back(std::move(pr));
        while (out.size() >= 2) {
            const Pair &a = out[out.size() - 2];
            const Pair &b = out.back();
            if (StandardDyadicInterval::siblings(a.first, b.first) &&
                StandardDyadicInterval::siblings(a.second, b.second)) {
                Pair merged{a.first.parent(), a.second.parent()};
                out.pop_back();
                out.back() = merged;
            } else {
                break;
            }
        }
    }
    pairs = std::move(out);
}

} // namespace

ThompsonElement ThompsonElement::identity() {
    return ThompsonElement(DyadicPartition::trivial(), DyadicPartition::trivial(), 0);
}

ThompsonElement ThompsonElement::rotation(std::uint32_t k) {
    if (k == 0) throw PreconditionError("rotation requires k >= 1");
    DyadicPartition u = DyadicPartition::uniform(k);
    return ThompsonElement(u, u, 1);
}

ThompsonElement ThompsonElement::from_parts(DyadicPartition domain, DyadicPartition range,
                                            std::size_t offset) {
    const std::size_t n = domain.size();
    if (range.size() != n) throw PreconditionError("domain and range sizes differ");
    if (offset >= n) throw PreconditionError("offset out of range");
    std::vector<Pair> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(domain[i], range[(i + offset) % n]);
    return detail_from_pairs(std::move(pairs));
}

ThompsonElement ThompsonElement::detail_from_pairs(std::vector<Pair> pairs) {
    canonicalize(pairs);
    std::vector<StandardDyadicInterval> dom, rng;
    for (const auto &pr : pairs) {
        dom.push_back(pr.first);
        rng.push_back(pr.second);
    }
    std::sort(rng.begin(), rng.end(), [](const auto &a, const auto &b) {
        return a.left() < b.left();
    });
    const auto first_image = pairs.front().second;
    std::size_t off = 0;
    while (!(rng[off] == first_image)) ++off;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (!(rng[(off + j) % pairs.size()] == pairs[j].second))
            throw PreconditionError("interval pairing does not preserve cyclic order");
    }
    return ThompsonElement(DyadicPartition::from_intervals(std::move(dom)),
                           DyadicPartition::from_intervals(std::move(rng)), off);
}

StandardDyadicInterval ThompsonElement::image_of(const StandardDyadicInterval &k) const {
    const std::size_t i = domain_.locate(k.left());
    if (!domain_[i].contains(k))
        throw PreconditionError("interval straddles a breakpoint of the map");
    const std::size_t j = (i + offset_) % domain_.size();
    return map_affine(domain_[i], range_[j], k);
}

StandardDyadicInterval ThompsonElement::preimage_of(const StandardDyadicInterval &c) const {
    const std::size_t j = range_.locate(c.left());
    if (!range_[j].contains(c))
        throw PreconditionError("interval straddles a breakpoint of the inverse map");
    const std::size_t j_shift = (j + domain_.size() - offset_) % domain_.size();
    return map_affine(range_[j], domain_[j_shift], c);
}

DyadicRational evaluate(const ThompsonElement &f, DyadicRational t) {
    const std::size_t i = f.domain().locate(t);
    const std::size_t j = (i + f.offset()) % f.pieces();
    const StandardDyadicInterval &d = f.domain()[i];
    const StandardDyadicInterval &r = f.range()[j];
    const std::int32_t shift = static_cast<std::int32_t>(d.n()) - static_cast<std::int32_t>(r.n());
    return r.left() + (t - d.left()).times_pow2(shift);
}

ThompsonElement compose(const ThompsonElement &f, const ThompsonElement &g) {
    const DyadicPartition mid = common_refinement(g.range(), f.domain());
    std::vector<Pair> pairs;
    pairs.reserve(mid.size());
    for (const auto &c : mid.intervals()) pairs.emplace_back(g.preimage_of(c), f.image_of(c));
    std::sort(pairs.begin(), pairs.end(), [](const Pair &a, const Pair &b) {
        return a.first.left() < b.first.left();
    });
    return ThompsonElement::detail_from_pairs(std::move(pairs));
}

ThompsonElement inverse(const ThompsonElement &f) {
    const std::size_t n = f.pieces();
    return ThompsonElement::from_parts(f.range(), f.domain(), (n - f.offset()) % n);
}

DyadicRational circle_distance_to_identity(const ThompsonElement &f) {
    const DyadicRational half = DyadicRational::half();
    const DyadicRational one = DyadicRational::one();
    auto circle_dist = [&](DyadicRational v) {
        const DyadicRational a = (v < DyadicRational::zero()) ? -v : v;
        return std::min(a, one - a);
    };

    DyadicRational best = DyadicRational::zero();
    for (std::size_t i = 0; i < f.pieces(); ++i) {
        const std::size_t j = (i + f.offset()) % f.pieces();
        const StandardDyadicInterval &d = f.domain()[i];
        const StandardDyadicInterval &r = f.range()[j];
        // Displacement is affine on the piece, with endpoint values:
        const DyadicRational vl = r.left() - d.left();
        const DyadicRational vr = r.right() - d.right();
        best = std::max(best, circle_dist(vl));
        best = std::max(best, circle_dist(vr));
        const DyadicRational lo = std::min(vl, vr), hi = std::max(vl, vr);
        // If the displacement passes through ±1/2 inside the piece, the
        // circle distance attains its maximum value 1/2 there.
        if ((lo <= half && half <= hi) || (lo <= -half && -half <= hi)) {
            best = std::max(best, half);
        }
    }
    return best;
}

DyadicPartition refine_for(const ThompsonElement &f, const DyadicPartition &I) {
    return common_refinement(I, f.domain());
}

} // namespace ttnrep
