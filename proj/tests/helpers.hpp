// Shared test utilities: seeded random matrices, states and circle maps.
#pragma once

#include <complex>
#include <random>
#include <vector>

#include "ttnrep/dyadic.hpp"
#include "ttnrep/linalg.hpp"
#include "ttnrep/thompson.hpp"

namespace testutil {

using ttnrep::cplx;

inline ttnrep::ComplexMatrix random_matrix(std::size_t rows, std::size_t cols,
                                           std::mt19937_64 &gen) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ttnrep::ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx(u(gen), u(gen));
    }
    return m;
}

inline ttnrep::ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64 &gen) {
    ttnrep::ComplexMatrix m = random_matrix(n, n, gen);
    return ttnrep::scale(ttnrep::add(m, ttnrep::adjoint(m)), 0.5);
}

inline ttnrep::StateVector random_state(std::size_t dim, std::mt19937_64 &gen,
                                        bool normalize = true) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ttnrep::StateVector v(dim);
    for (auto &a : v.amplitudes) a = cplx(u(gen), u(gen));
    if (normalize) {
        const double nrm = v.norm();
        for (auto &a : v.amplitudes) a /= nrm;
    }
    return v;
}

/// Random standard dyadic partition: split intervals at random until either
/// `pieces` intervals exist or every interval sits at `max_depth`.
inline ttnrep::DyadicPartition random_partition(std::uint32_t max_depth, std::size_t pieces,
                                                std::mt19937_64 &gen) {
    std::vector<ttnrep::StandardDyadicInterval> ivs{ttnrep::StandardDyadicInterval(0, 0)};
    while (ivs.size() < pieces) {
        std::vector<std::size_t> splittable;
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            if (ivs[i].n() < max_depth) splittable.push_back(i);
        }
        if (splittable.empty()) break;
        const std::size_t pick =
            splittable[std::uniform_int_distribution<std::size_t>(0, splittable.size() - 1)(gen)];
        const auto parent = ivs[pick];
        ivs[pick] = parent.left_child();
        ivs.insert(ivs.begin() + static_cast<std::ptrdiff_t>(pick) + 1, parent.right_child());
    }
    return ttnrep::DyadicPartition::from_intervals(std::move(ivs));
}

/// Random circle map of depth <= max_depth with at most `max_pieces` pieces.
inline ttnrep::ThompsonElement random_element(std::uint32_t max_depth, std::size_t max_pieces,
                                              std::mt19937_64 &gen) {
    const std::size_t pieces =
        std::uniform_int_distribution<std::size_t>(1, max_pieces)(gen);
    ttnrep::DyadicPartition dom = random_partition(max_depth, pieces, gen);
    // The range needs exactly |dom| intervals; keep drawing until the split
    // budget allows it (always possible when pieces <= 2^max_depth).
    ttnrep::DyadicPartition rng = random_partition(max_depth, dom.size(), gen);
    while (rng.size() != dom.size()) rng = random_partition(max_depth, dom.size(), gen);
    const std::size_t off = std::uniform_int_distribution<std::size_t>(0, dom.size() - 1)(gen);
    return ttnrep::ThompsonElement::from_parts(dom, rng, off);
}

inline ttnrep::DyadicRational random_point(std::uint32_t depth, std::mt19937_64 &gen) {
    const std::int64_t den = std::int64_t{1} << depth;
    const std::int64_t num = std::uniform_int_distribution<std::int64_t>(0, den - 1)(gen);
    return ttnrep::DyadicRational(num, depth);
}

} // namespace testutil
