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

#include "ttnrep/diagnostics.hpp"

#include <cmath>

#include "ttnrep/errors.hpp"

namespace ttnrep {
namespace {

// Operator norm with pre-scaling so that doubly-exponentially small iterates
// do not underflow inside the Gram products. Power-of-two lifting keeps the
// computation exact down to subnormal iterates.
double scaled_operator_norm(const ComplexMatrix &m) {
    double peak = max_abs(m);
    if (peak == 0.0 || !std::isfinite(peak)) return peak == 0.0 ? 0.0 : peak;
    if (peak >= 1e-200) return peak * operator_norm(scale(m, 1.0 / peak));
    const ComplexMatrix lifted = scale(m, 0x1p900);
    peak = max_abs(lifted);
    return peak * operator_norm(scale(lifted, 1.0 / peak)) * 0x1p-900;
}

ComplexMatrix swap_matrix(std::size_t d) {
    ComplexMatrix s(d * d, d * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) s(b * d + a, a * d + b) = 1.0;
    }
    return s;
}

struct RenormContext {
    ComplexMatrix v_left;   // V (x) I
    ComplexMatrix vdag_right; // I (x) V†

    explicit RenormContext(const Isometry &v) {
        const ComplexMatrix eye = ComplexMatrix::identity(v.d());
        v_left = kron(v.matrix(), eye);
        vdag_right = kron(eye, adjoint(v.matrix()));
    }

    ComplexMatrix apply(const ComplexMatrix &z, std::size_t d) const {
        const ComplexMatrix eye = ComplexMatrix::identity(d);
        return matmul(vdag_right,
                      matmul(kron(z, eye), matmul(kron(eye, z), v_left)));
    }
};

} // namespace

ComplexMatrix overlap_operator(const Isometry &v) {
    const RenormContext ctx(v);
    return matmul(ctx.vdag_right, ctx.v_left);
}

ComplexMatrix renorm_map(const ComplexMatrix &z, const Isometry &v) {
    if (z.rows() != v.d() * v.d() || z.cols() != v.d() * v.d()) {
        throw PreconditionError("renorm_map: argument must be d^2 x d^2");
    }
    return RenormContext(v).apply(z, v.d());
}

std::vector<double> decay_series(const Isometry &v, std::size_t kmax,
                                 std::int64_t *underflow_from, const Tolerances &tol) {
    if (kmax > 12) throw PreconditionError("decay_series: kmax must be <= 12");
    const RenormContext ctx(v);
    std::vector<double> series;
    series.reserve(kmax + 1);
    std::int64_t underflow = -1;

    ComplexMatrix z = overlap_operator(v);
    for (std::size_t k = 0; k <= kmax; ++k) {
        if (k > 0) z = ctx.apply(z, v.d());
        double s = scaled_operator_norm(z);
        if (s < tol.underflow_floor) {
            underflow = static_cast<std::int64_t>(k);
            for (std::size_t j = k; j <= kmax; ++j) series.push_back(0.0);
            break;
        }
        series.push_back(s);
    }
    if (underflow_from) *underflow_from = underflow;
    return series;
}

ComplexMatrix gamma_operator(const ComplexMatrix &p, std::size_t d, const Tolerances &tol) {
    if (p.rows() != d * d || p.cols() != d * d) {
        throw PreconditionError("gamma_operator: projector must be d^2 x d^2");
    }
    const double scale_ref = std::max(1.0, max_abs(p));
    if (max_abs(subtract(p, adjoint(p))) > tol.spectra * scale_ref) {
        throw PreconditionError("gamma_operator: input is not Hermitian");
    }
    if (max_abs(subtract(matmul(p, p), p)) > tol.spectra * scale_ref) {
        throw PreconditionError("gamma_operator: input is not idempotent");
    }
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    const ComplexMatrix p_left = kron(p, eye);
    const ComplexMatrix p_right = kron(eye, p);
    return matmul(p_left, matmul(p_right, p_left));
}

std::size_t intersection_dimension(const Isometry &v, const Tolerances &tol) {
    const Eigensystem es = hermitian_eigensystem(gamma_operator(v.projector(), v.d(), tol));
    std::size_t count = 0;
    for (double lam : es.values) {
        if (lam >= 1.0 - tol.eigenvalue_one) ++count;
    }
    return count;
}

double genericity_polynomial(const Isometry &v, const Tolerances &tol) {
    const Eigensystem es = hermitian_eigensystem(gamma_operator(v.projector(), v.d(), tol));
    double det = 1.0;
    for (double lam : es.values) det *= (1.0 - lam);
    return det;
}

ComplexMatrix boundary_operator(const StateVector &phi, const StateVector &psi, std::size_t d) {
    if (phi.dim() != d || psi.dim() != d) {
        throw PreconditionError("boundary_operator: states must live on C^d");
    }
    // (|psi><phi| (x) I) . SWAP: the rank-one factor closes the top/bottom
    // boundary wires, the identity factor carries the wrap-around wire, and
    // the swap realizes the wire crossing of the periodic closure. Pinned
    // against the brute-force oracle at k = 1, 2 and frozen.
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    return matmul(kron(outer(psi, phi), eye), swap_matrix(d));
}

cplx transfer_matrix_element(const Isometry &v, const StateVector &phi, const StateVector &psi,
                             std::uint32_t k) {
    if (k == 0) throw PreconditionError("transfer_matrix_element requires k >= 1");
    const RenormContext ctx(v);
    ComplexMatrix z = overlap_operator(v);
    for (std::uint32_t j = 1; j < k; ++j) z = ctx.apply(z, v.d());
    return trace(matmul(z, boundary_operator(phi, psi, v.d())));
}

MelementSeries transfer_series(const Isometry &v, const StateVector &phi, const StateVector &psi,
                               std::uint32_t kmax) {
    if (kmax == 0) throw PreconditionError("transfer_series requires kmax >= 1");
    const ComplexMatrix a = boundary_operator(phi, psi, v.d());
    const double a_trace_norm = trace_norm(a);
    const RenormContext ctx(v);
    MelementSeries series;
    ComplexMatrix z = overlap_operator(v);
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        if (k > 1) z = ctx.apply(z, v.d());
        series.ks.push_back(k);
        series.values.push_back(trace(matmul(z, a)));
        series.bounds.push_back(scaled_operator_norm(z) * a_trace_norm);
    }
    return series;
}

Certificate discontinuity_certificate(const Isometry &v, const Tolerances &tol) {
    const ComplexMatrix p = v.projector();
    const ComplexMatrix eye = ComplexMatrix::identity(v.d());
    const double cross = operator_norm(matmul(kron(eye, p), kron(p, eye)));
    Certificate c;
    c.margin = 1.0 - cross;
    c.holds = cross < 1.0 - tol.condition;
    return c;
}

DiagnosticsReport run_diagnostics(const Isometry &v, const std::string &source,
                                  std::size_t kmax, const Tolerances &tol) {
    DiagnosticsReport rep;
    rep.d = v.d();
    rep.source = source;

    const ComplexMatrix p = v.projector();
    const ComplexMatrix eye = ComplexMatrix::identity(v.d());
    rep.norm_x = operator_norm(overlap_operator(v));
    rep.norm_cross = operator_norm(matmul(kron(eye, p), kron(p, eye)));
    rep.margin = 1.0 - rep.norm_cross;
    rep.certificate = rep.norm_cross < 1.0 - tol.condition;

    const ComplexMatrix gamma = gamma_operator(p, v.d(), tol);
    const Eigensystem es = hermitian_eigensystem(gamma);
    // Positive semidefinite, so the norm is the top eigenvalue.
    rep.norm_gamma = std::max(std::abs(es.values.front()), std::abs(es.values.back()));
    rep.condition_holds = rep.norm_gamma < 1.0 - tol.condition;
    rep.intersection_dim = 0;
    rep.genericity_det = 1.0;
    for (double lam : es.values) {
        if (lam >= 1.0 - tol.eigenvalue_one) ++rep.intersection_dim;
        rep.genericity_det *= (1.0 - lam);
    }

    rep.decay_series = decay_series(v, std::min<std::size_t>(kmax, 12), &rep.underflow_from, tol);

    // Rotation matrix elements for the default boundary states e_0, e_0,
    // evaluated through the renormalization identity.
    const StateVector e0 = StateVector::basis(v.d(), 0);
    rep.melement_series = transfer_series(v, e0, e0, static_cast<std::uint32_t>(kmax)).values;
    return rep;
}

} // namespace ttnrep
