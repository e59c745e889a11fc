// Scalar/SIMD kernel equivalence: every backend must agree with the scalar
// reference up to FMA reassociation.

#include <doctest.h>

#include <random>
#include <vector>

#include "ttnrep/kernels.hpp"

using namespace ttnrep;
using kernels::cplx;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::mt19937_64 &gen) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto &z : v) z = cplx(u(gen), u(gen));
    return v;
}

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

} // namespace

TEST_CASE("kernel backends agree with the scalar reference") {
    const kernels::Backend original = kernels::active_backend();
    const kernels::KernelTable &scalar = kernels::scalar_table;
    const kernels::KernelTable &active = kernels::active();

    std::mt19937_64 gen(42);
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{17},
                          std::size_t{64}, std::size_t{129}}) {
        const auto x = random_vec(n, gen);
        const auto y = random_vec(n, gen);
        const cplx alpha(0.3, -0.7);
        const double tol = 1e-13 * static_cast<double>(n);

        // axpy
        auto y1 = y, y2 = y;
        scalar.axpy(n, alpha, x.data(), y1.data());
        active.axpy(n, alpha, x.data(), y2.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(close(y1[i], y2[i], tol));

        // cdotc
        CHECK(close(scalar.cdotc(n, x.data(), y.data()), active.cdotc(n, x.data(), y.data()),
                    tol));

        // scal
        auto s1 = x, s2 = x;
        scalar.scal(n, alpha, s1.data());
        active.scal(n, alpha, s2.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(close(s1[i], s2[i], tol));

        // nrm2sq
        CHECK(scalar.nrm2sq(n, x.data()) == doctest::Approx(active.nrm2sq(n, x.data())).epsilon(1e-13));

        // rot
        auto rx1 = x, ry1 = y, rx2 = x, ry2 = y;
        const double c = 0.8;
        const cplx s(0.36, -0.48);
        scalar.rot(n, rx1.data(), ry1.data(), c, s);
        active.rot(n, rx2.data(), ry2.data(), c, s);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(close(rx1[i], rx2[i], tol));
            CHECK(close(ry1[i], ry2[i], tol));
        }
    }
    kernels::set_backend(original);
}

TEST_CASE("kernel semantics on tiny cases") {
    const cplx a(0.0, 1.0); // i
    std::vector<cplx> x{cplx(1.0, 0.0), cplx(0.0, 2.0)};
    std::vector<cplx> y{cplx(0.0, 0.0), cplx(1.0, 0.0)};
    kernels::axpy(2, a, x.data(), y.data());
    CHECK(y[0] == cplx(0.0, 1.0));   // i*1
    CHECK(y[1] == cplx(-1.0, 0.0));  // 1 + i*(2i) = -1

    // <x, y> conjugates the first argument
    std::vector<cplx> u{cplx(0.0, 1.0)};
    std::vector<cplx> w{cplx(1.0, 0.0)};
    CHECK(kernels::cdotc(1, u.data(), w.data()) == cplx(0.0, -1.0));
}

TEST_CASE("backend dispatch reports a known name") {
    const std::string name = kernels::backend_name();
    CHECK((name == "scalar" || name == "avx2" || name == "neon"));
}
