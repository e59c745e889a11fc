// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Tolerances and runtime budgets are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ttnrep/diagnostics.hpp"
#include "ttnrep/ensembles.hpp"
#include "ttnrep/thompson.hpp"
#include "ttnrep/ttn.hpp"

using namespace ttnrep;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

template <typename Fn>
void criterion(int id, const char *name, double budget_seconds, Fn &&fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = fn();
    } catch (const std::exception &e) {
        outcome.pass = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (elapsed >= budget_seconds) {
        outcome.pass = false;
        outcome.detail += (outcome.detail.empty() ? "" : "; ") + std::string("over budget");
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %d. %s (%s; %.2f s / budget %.0f s)\n", outcome.pass ? "PASS" : "FAIL",
                id, name, outcome.detail.c_str(), elapsed, budget_seconds);
    std::fflush(stdout);
}

std::string fmt_sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", x);
    return buf;
}

Outcome transfer_formula_correctness() {
    std::mt19937_64 gen(2026);
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Isometry v = haar_isometry(2, 1000 + seed);
        const StateVector phi = testutil::random_state(2, gen);
        const StateVector psi = testutil::random_state(2, gen);
        for (std::uint32_t k = 1; k <= 4; ++k) {
            worst = std::max(worst, std::abs(transfer_matrix_element(v, phi, psi, k) -
                                             rotation_matrix_element(v, phi, psi, k)));
        }
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Isometry v = haar_isometry(3, 2000 + seed);
        const StateVector phi = testutil::random_state(3, gen);
        const StateVector psi = testutil::random_state(3, gen);
        for (std::uint32_t k = 1; k <= 3; ++k) {
            worst = std::max(worst, std::abs(transfer_matrix_element(v, phi, psi, k) -
                                             rotation_matrix_element(v, phi, psi, k)));
        }
    }
    return {worst <= 1e-9, "max |transfer - direct| = " + fmt_sci(worst)};
}

Outcome doubly_exponential_decay() {
    double worst_closed = 0.0, worst_step = 0.0;
    for (std::size_t d : {std::size_t{2}, std::size_t{3}, std::size_t{4}}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const Isometry v = haar_isometry(d, 3000 + seed);
            const auto series = decay_series(v, 7);
            double closed = series[0];
            for (std::size_t k = 1; k <= 7; ++k) {
                closed *= closed; // norm_x^{2^k}
                if (closed > 0.0) {
                    worst_closed = std::max(worst_closed, series[k] / closed - 1.0);
                }
                const double sq = series[k - 1] * series[k - 1];
                if (sq > 0.0) {
                    worst_step = std::max(worst_step, series[k] / sq - 1.0);
                } else if (series[k] != 0.0) {
                    worst_step = 1.0; // flatly violated
                }
            }
        }
    }
    const bool ok = worst_closed <= 1e-9 && worst_step <= 1e-10;
    return {ok, "worst closed-bound excess = " + fmt_sci(worst_closed) +
                    ", worst stepwise excess = " + fmt_sci(worst_step)};
}

Outcome genericity() {
    std::size_t margin_violations = 0;
    double min_margin = 1.0;
    bool hard_ok = true;
    for (std::size_t d : {std::size_t{2}, std::size_t{3}, std::size_t{4}}) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const Isometry v = haar_isometry(d, 4000 + seed);
            if (intersection_dimension(v) != 0) {
                hard_ok = false;
                std::printf("       d=%zu seed=%llu: nontrivial intersection\n", d,
                            static_cast<unsigned long long>(4000 + seed));
            }
            if (genericity_polynomial(v) <= 0.0) {
                hard_ok = false;
                std::printf("       d=%zu seed=%llu: vanishing determinant\n", d,
                            static_cast<unsigned long long>(4000 + seed));
            }
            const Certificate cert = discontinuity_certificate(v);
            min_margin = std::min(min_margin, cert.margin);
            if (cert.margin < 1e-4) {
                ++margin_violations;
                std::printf("       d=%zu seed=%llu: margin %.3e below empirical threshold\n", d,
                            static_cast<unsigned long long>(4000 + seed), cert.margin);
                if (cert.margin <= 0.0) hard_ok = false;
            }
        }
    }
    return {hard_ok, "300 samples, min margin = " + fmt_sci(min_margin) + ", " +
                         std::to_string(margin_violations) + " below 1e-4 (reported)"};
}

Outcome so3_example() {
    const Isometry v = so3_isometry();
    const std::size_t dim = intersection_dimension(v);
    const double nx = operator_norm(overlap_operator(v));
    const Certificate cert = discontinuity_certificate(v);

    const Eigensystem es = hermitian_eigensystem(gamma_operator(v.projector(), 3));
    StateVector top(27);
    for (std::size_t i = 0; i < 27; ++i) top.amplitudes[i] = es.vectors(i, 26);
    StateVector ref(27);
    const double c = 1.0 / std::sqrt(6.0);
    ref.amplitudes[21] = -c;
    ref.amplitudes[19] = c;
    ref.amplitudes[15] = c;
    ref.amplitudes[11] = -c;
    ref.amplitudes[7] = -c;
    ref.amplitudes[5] = c;
    const double fidelity = std::abs(dot_conj(ref, top));

    const bool ok = dim == 1 && fidelity >= 1.0 - 1e-10 && std::abs(nx - 1.0) <= 1e-10 &&
                    !cert.holds;
    return {ok, "intersection dim = " + std::to_string(dim) +
                    ", fidelity deficit = " + fmt_sci(1.0 - fidelity) +
                    ", |norm_x - 1| = " + fmt_sci(std::abs(nx - 1.0)) +
                    ", certificate = " + (cert.holds ? "true" : "false")};
}

Outcome stabilizer_example() {
    bool ok = true;
    std::string detail;
    for (std::size_t d : {std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
        const Isometry v = pauli_stabilizer_isometry(d);
        const double rank = trace(v.projector()).real();
        const std::size_t dim = intersection_dimension(v);
        const Certificate cert = discontinuity_certificate(v);
        const bool here = std::abs(rank - static_cast<double>(d)) <= 1e-10 && dim == 0 &&
                          cert.holds;
        ok = ok && here;
        detail += "d=" + std::to_string(d) + ": rank=" + std::to_string(d) +
                  ", dim=" + std::to_string(dim) + ", cert=" + (cert.holds ? "y" : "n") + "; ";
    }
    return {ok, detail};
}

Outcome thompson_algebra() {
    std::mt19937_64 gen(777);
    const ThompsonElement id = ThompsonElement::identity();

    // group laws on 1000 random elements of depth <= 5
    std::vector<ThompsonElement> elems;
    elems.reserve(1000);
    for (int i = 0; i < 1000; ++i) elems.push_back(testutil::random_element(5, 12, gen));
    for (const auto &f : elems) {
        if (!(compose(f, inverse(f)) == id) || !(compose(inverse(f), f) == id) ||
            !(compose(f, id) == f) || !(compose(id, f) == f)) {
            return {false, "identity/inverse law violated"};
        }
    }
    // associativity on consecutive triples, exact on the 2^8 grid
    for (std::size_t i = 0; i + 2 < elems.size(); i += 3) {
        const ThompsonElement a = compose(compose(elems[i], elems[i + 1]), elems[i + 2]);
        const ThompsonElement b = compose(elems[i], compose(elems[i + 1], elems[i + 2]));
        for (std::int64_t j = 0; j < 256; ++j) {
            const DyadicRational t(j, 8);
            if (!(evaluate(a, t) == evaluate(b, t))) {
                return {false, "associativity violated"};
            }
        }
    }
    // rotations approach the identity at the exact rate
    for (std::uint32_t k = 1; k <= 20; ++k) {
        if (!(circle_distance_to_identity(ThompsonElement::rotation(k)) ==
              DyadicRational(1, k))) {
            return {false, "rotation distance differs from 2^-k at k=" + std::to_string(k)};
        }
    }
    // refine_for postconditions on 500 random pairs
    for (int i = 0; i < 500; ++i) {
        const ThompsonElement f = testutil::random_element(5, 10, gen);
        const DyadicPartition part = testutil::random_partition(5, 10, gen);
        const DyadicPartition fine = refine_for(f, part);
        if (!refines(part, fine) || !refines(f.domain(), fine)) {
            return {false, "refine_for coarseness violated"};
        }
        std::vector<StandardDyadicInterval> images;
        for (const auto &iv : fine.intervals()) {
            const auto img = f.image_of(iv); // throws if not affine on iv
            if (!is_standard(img.left(), img.right())) {
                return {false, "image interval not standard"};
            }
            images.push_back(img);
        }
        std::sort(images.begin(), images.end(),
                  [](const auto &a, const auto &b) { return a.left() < b.left(); });
        DyadicPartition::from_intervals(images); // throws unless a tiling
    }
    return {true, "1000 elements, 333 triples, 20 rotations, 500 refinements, all exact"};
}

Outcome representation_consistency() {
    std::mt19937_64 gen(888);
    const Isometry v = haar_isometry(2, 99);
    auto random_scale_state = [&](const DyadicPartition &p) {
        std::uint64_t dim = 1;
        for (std::size_t i = 0; i < p.size(); ++i) dim *= 2;
        return ScaleState(2, p, testutil::random_state(dim, gen));
    };

    double worst_hom = 0.0, worst_unit = 0.0, worst_refine = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        const ThompsonElement f = testutil::random_element(3, 6, gen);
        const ThompsonElement g = testutil::random_element(3, 6, gen);
        const ScaleState s = random_scale_state(testutil::random_partition(3, 4, gen));
        const ScaleState t = random_scale_state(testutil::random_partition(3, 4, gen));

        const cplx composed = inner_product(apply_thompson(compose(f, g), s, v), t, v);
        const cplx stepwise = inner_product(apply_thompson(f, apply_thompson(g, s, v), v), t, v);
        worst_hom = std::max(worst_hom, std::abs(composed - stepwise));

        const cplx before = inner_product(s, t, v);
        const cplx after = inner_product(apply_thompson(f, s, v), apply_thompson(f, t, v), v);
        worst_unit = std::max(worst_unit, std::abs(before - after));

        const DyadicPartition deeper = common_refinement(
            common_refinement(s.partition, t.partition), testutil::random_partition(4, 6, gen));
        const cplx at_deeper =
            dot_conj(refine_state(s, deeper, v).vector, refine_state(t, deeper, v).vector);
        worst_refine = std::max(worst_refine, std::abs(before - at_deeper));
    }
    const bool ok = worst_hom <= 1e-10 && worst_unit <= 1e-11 && worst_refine <= 1e-11;
    return {ok, "homomorphism dev = " + fmt_sci(worst_hom) +
                    ", unitarity dev = " + fmt_sci(worst_unit) +
                    ", refinement dev = " + fmt_sci(worst_refine)};
}

Outcome weak_discontinuity_demo() {
    const Isometry v = haar_isometry(2, 7);
    const StateVector e0 = StateVector::basis(2, 0);

    // <Phi, Psi> = 1 for phi = psi = e0 (same class, unit norm)
    const ScaleState s(2, DyadicPartition::trivial(), e0);
    const double overlap = std::abs(inner_product(s, s, v));
    if (std::abs(overlap - 1.0) > 1e-12) {
        return {false, "baseline overlap differs from 1"};
    }
    const double nx = operator_norm(overlap_operator(v));
    if (nx > 1.0 - 1e-4) {
        return {false, "sample is not generic enough for the k* guarantee"};
    }

    const MelementSeries series = transfer_series(v, e0, e0, 30);
    for (std::size_t i = 0; i < series.ks.size(); ++i) {
        if (std::abs(series.values[i]) > series.bounds[i] * (1.0 + 1e-9) + 1e-300) {
            return {false, "Hoelder bound violated at k=" + std::to_string(series.ks[i])};
        }
    }
    // k*: all matrix elements from k* on stay below 1e-6
    std::int64_t kstar = -1;
    for (std::size_t i = 0; i < series.ks.size(); ++i) {
        bool tail_small = true;
        for (std::size_t j = i; j < series.ks.size(); ++j) {
            if (std::abs(series.values[j]) >= 1e-6) tail_small = false;
        }
        if (tail_small) {
            kstar = series.ks[i];
            break;
        }
    }
    if (kstar < 0) {
        return {false, "no k* with |M_k| < 1e-6 for k >= k* up to 30"};
    }
    return {true, "overlap = 1, bounds hold for k <= 30, k* = " + std::to_string(kstar) +
                      ", |M_30| = " + fmt_sci(std::abs(series.values.back()))};
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion(1, "transfer formula matches the brute-force oracle", 30.0,
              transfer_formula_correctness);
    criterion(2, "renormalized overlap norms decay doubly exponentially", 60.0,
              doubly_exponential_decay);
    criterion(3, "Haar-generic isometries satisfy the trivial-intersection condition", 60.0,
              genericity);
    criterion(4, "rotation-equivariant d=3 example has a one-dimensional intersection", 5.0,
              so3_example);
    criterion(5, "shift-phase stabilizer example is generic for d in {2,3,5}", 5.0,
              stabilizer_example);
    criterion(6, "exact circle-map algebra", 30.0, thompson_algebra);
    criterion(7, "group action is consistent on finite-scale representatives", 60.0,
              representation_consistency);
    criterion(8, "matrix elements of vanishing rotations decay away from the overlap", 10.0,
              weak_discontinuity_demo);
    if (failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criterion(s) failed\n", failures);
    }
    return failures;
}
