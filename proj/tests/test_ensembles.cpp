#include <doctest.h>

#include <cstdlib>
#include <random>

#include "helpers.hpp"
#include "ttnrep/diagnostics.hpp"
#include "ttnrep/ensembles.hpp"
#include "ttnrep/errors.hpp"

using namespace ttnrep;

namespace {

// Independent eigenspace construction: one fixed vector per phase sector.
ComplexMatrix stabilizer_reference_projector(std::size_t d) {
    ComplexMatrix p(d * d, d * d);
    for (std::size_t b = 0; b < d; ++b) {
        StateVector w(d * d);
        for (std::size_t a = 0; a < d; ++a) {
            const double ang = 2.0 * 3.14159265358979323846 * static_cast<double>(a * b) /
                               static_cast<double>(d);
            w.amplitudes[a * d + b] = cplx(std::cos(ang), std::sin(ang)) / std::sqrt(double(d));
        }
        p = add(p, outer(w, w));
    }
    return p;
}

} // namespace

TEST_CASE("generalized Pauli relations") {
    for (std::size_t d : {std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
        const ComplexMatrix x = pauli_x(d);
        const ComplexMatrix z = pauli_z(d);
        // X^d = Z^d = I
        ComplexMatrix xp = ComplexMatrix::identity(d), zp = ComplexMatrix::identity(d);
        for (std::size_t k = 0; k < d; ++k) {
            xp = matmul(x, xp);
            zp = matmul(z, zp);
        }
        CHECK(max_abs(subtract(xp, ComplexMatrix::identity(d))) <= 1e-13);
        CHECK(max_abs(subtract(zp, ComplexMatrix::identity(d))) <= 1e-13);
        // ZX = w XZ
        const double ang = 2.0 * 3.14159265358979323846 / static_cast<double>(d);
        const cplx w(std::cos(ang), std::sin(ang));
        CHECK(max_abs(subtract(matmul(z, x), scale(matmul(x, z), w))) <= 1e-13);
    }
}

TEST_CASE("stabilizer isometry: fixed space of dimension d") {
    for (std::size_t d : {std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
        const Isometry v = pauli_stabilizer_isometry(d);
        CHECK(v.d() == d);

        // columns are fixed by S
        const ComplexMatrix s = kron(pauli_x(d), pauli_z(d));
        CHECK(max_abs(subtract(matmul(s, v.matrix()), v.matrix())) <= 1e-12);

        // projector equals the explicit per-sector construction
        CHECK(max_abs(subtract(v.projector(), stabilizer_reference_projector(d))) <= 1e-12);

        // the two shifted stabilizers do not commute
        const ComplexMatrix eye = ComplexMatrix::identity(d);
        const ComplexMatrix s1 = kron(s, eye);
        const ComplexMatrix s2 = kron(eye, s);
        CHECK(operator_norm(subtract(matmul(s1, s2), matmul(s2, s1))) > 0.1);

        // hence the intersection is trivial and the certificate holds
        CHECK(intersection_dimension(v) == 0);
        CHECK(discontinuity_certificate(v).holds);
    }
}

TEST_CASE("stabilizer d=2 matches the textbook span") {
    const Isometry v = pauli_stabilizer_isometry(2);
    // (|00> + |10>)/sqrt(2) and (|01> - |11>)/sqrt(2)
    StateVector a(4), b(4);
    a.amplitudes[0] = a.amplitudes[2] = 1.0 / std::sqrt(2.0);
    b.amplitudes[1] = 1.0 / std::sqrt(2.0);
    b.amplitudes[3] = -1.0 / std::sqrt(2.0);
    const ComplexMatrix expect = add(outer(a, a), outer(b, b));
    CHECK(max_abs(subtract(v.projector(), expect)) <= 1e-12);
}

TEST_CASE("so3 isometry: antisymmetric image with unit-norm overlap") {
    const Isometry v = so3_isometry();
    CHECK(v.d() == 3);
    CHECK(max_abs(subtract(matmul(adjoint(v.matrix()), v.matrix()),
                           ComplexMatrix::identity(3))) <= 1e-15);

    // SWAP (V psi) = -(V psi)
    std::mt19937_64 gen(3);
    ComplexMatrix swap(9, 9);
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) swap(b * 3 + a, a * 3 + b) = 1.0;
    }
    for (int trial = 0; trial < 5; ++trial) {
        const StateVector psi = testutil::random_state(3, gen);
        const StateVector img = apply(v.matrix(), psi);
        const StateVector swapped = apply(swap, img);
        double dev = 0.0;
        for (std::size_t i = 0; i < 9; ++i) {
            dev = std::max(dev, std::abs(swapped.amplitudes[i] + img.amplitudes[i]));
        }
        CHECK(dev <= 1e-14);
    }

    CHECK(intersection_dimension(v) == 1);
    CHECK(operator_norm(overlap_operator(v)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(!discontinuity_certificate(v).holds);
    CHECK(std::abs(genericity_polynomial(v)) <= 1e-8);

    // the unit eigenvector of the overlap product is the six-term
    // antisymmetric combination (fidelity >= 1 - 1e-10)
    const Eigensystem es = hermitian_eigensystem(gamma_operator(v.projector(), 3));
    StateVector top(27);
    for (std::size_t i = 0; i < 27; ++i) top.amplitudes[i] = es.vectors(i, 26);
    CHECK(es.values[26] == doctest::Approx(1.0).epsilon(1e-10));
    StateVector ref(27);
    const double c = 1.0 / std::sqrt(6.0);
    // basis order (|1>,|0>,|-1>) -> indices 0,1,2; (a,b,c) -> 9a+3b+c
    ref.amplitudes[21] = -c; // -|-1,0,1>
    ref.amplitudes[19] = c;  // +|-1,1,0>
    ref.amplitudes[15] = c;  // +|0,-1,1>
    ref.amplitudes[11] = -c; // -|0,1,-1>
    ref.amplitudes[7] = -c;  // -|1,-1,0>
    ref.amplitudes[5] = c;   // +|1,0,-1>
    const double fidelity = std::abs(dot_conj(ref, top));
    CHECK(fidelity >= 1.0 - 1e-10);
}

TEST_CASE("spin-1 matrices satisfy the angular momentum algebra") {
    const ComplexMatrix jx = spin1_jx(), jy = spin1_jy(), jz = spin1_jz();
    const ComplexMatrix comm = subtract(matmul(jx, jy), matmul(jy, jx));
    CHECK(max_abs(subtract(comm, scale(jz, cplx(0.0, 1.0)))) <= 1e-14);
    // J^2 = j(j+1) I = 2I
    const ComplexMatrix j2 = add(add(matmul(jx, jx), matmul(jy, jy)), matmul(jz, jz));
    CHECK(max_abs(subtract(j2, scale(ComplexMatrix::identity(3), 2.0))) <= 1e-14);
}

TEST_CASE("equivariance of the so3 isometry under spin-1 rotations") {
    const Isometry v = so3_isometry();
    CHECK(check_symmetry(v, ComplexMatrix::identity(3)) <= 1e-15);
    for (double theta : {0.3, 1.1, 2.7}) {
        CHECK(check_symmetry(v, unitary_exp_i(spin1_jy(), theta)) <= 1e-10);
        CHECK(check_symmetry(v, unitary_exp_i(spin1_jx(), theta)) <= 1e-10);
        CHECK(check_symmetry(v, unitary_exp_i(spin1_jz(), theta)) <= 1e-10);
    }
    // image projector commutes with U (x) U
    for (double theta : {0.5, 1.9}) {
        const ComplexMatrix u = unitary_exp_i(spin1_jy(), theta);
        const ComplexMatrix uu = kron(u, u);
        const ComplexMatrix p = v.projector();
        CHECK(max_abs(subtract(matmul(p, uu), matmul(uu, p))) <= 1e-10);
    }

    // a generic isometry has no such symmetry
    const Isometry hv = haar_isometry(3, 7);
    const ComplexMatrix u = unitary_exp_i(spin1_jy(), 0.9);
    CHECK(check_symmetry(hv, u) > 1e-3);

    // non-unitary symmetry candidates are rejected
    ComplexMatrix bad(3, 3);
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(check_symmetry(v, bad), PreconditionError);
}

TEST_CASE("genericity scan: deterministic, keyed by seed, clean at small size") {
    EnsembleConfig cfg;
    cfg.d = 2;
    cfg.num_samples = 6;
    cfg.base_seed = 500;
    cfg.kmax = 4;
    const auto a = genericity_scan(cfg);
    const auto b = genericity_scan(cfg);
    REQUIRE(a.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].source == "haar:seed=" + std::to_string(500 + i));
        CHECK(a[i].norm_x == b[i].norm_x);
        CHECK(a[i].norm_gamma == b[i].norm_gamma);
        CHECK(a[i].genericity_det == b[i].genericity_det);
        CHECK(a[i].condition_holds);
    }
    const ScanSummary s = summarize_scan(a);
    CHECK(s.condition_failures == 0);
    CHECK(s.min_margin > 0.0);

    // the thread cap does not change results
    setenv("DYADIC_LIMIT_THREADS", "2", 1);
    const auto c = genericity_scan(cfg);
    unsetenv("DYADIC_LIMIT_THREADS");
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].norm_gamma == c[i].norm_gamma);
    }

    EnsembleConfig invalid = cfg;
    invalid.num_samples = 0;
    CHECK_THROWS_AS(genericity_scan(invalid), PreconditionError);
}
