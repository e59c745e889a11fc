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

#include "ttnrep/linalg.hpp"

#include <cmath>
#include <sstream>

#include "ttnrep/errors.hpp"
#include "ttnrep/kernels.hpp"

namespace ttnrep {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx &z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    StateVector v(dim);
    v.amplitudes.at(index) = 1.0;
    return v;
}

double StateVector::norm() const {
    return std::sqrt(kernels::nrm2sq(amplitudes.size(), amplitudes.data()));
}

bool StateVector::all_finite() const {
    for (const cplx &z : amplitudes) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

Isometry Isometry::from_matrix(std::size_t d, ComplexMatrix m, double tol) {
    if (d < kMinSiteDim || d > kMaxSiteDim) {
        std::ostringstream os;
        os << "site dimension " << d << " outside [" << kMinSiteDim << ", " << kMaxSiteDim << "]";
        throw PreconditionError(os.str());
    }
    if (m.rows() != d * d || m.cols() != d) {
        throw PreconditionError("isometry matrix must be d^2 x d");
    }
    if (!m.all_finite()) throw PreconditionError("isometry has non-finite entries");
    ComplexMatrix gram = matmul(adjoint(m), m);
    double dev = max_abs(subtract(gram, ComplexMatrix::identity(d)));
    if (dev > tol) {
        std::ostringstream os;
        os << "matrix is not an isometry: max |V†V - I| = " << dev;
        throw PreconditionError(os.str());
    }
    return Isometry(d, std::move(m));
}

ComplexMatrix Isometry::projector() const { return matmul(m_, adjoint(m_)); }

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) throw PreconditionError("matmul: inner dimensions differ");
    ComplexMatrix c(a.rows(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx *ci = c.row(i);
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const cplx ail = a(i, l);
            if (ail == cplx{}) continue;
            kernels::axpy(n, ail, b.row(l), ci);
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    }
    return r;
}

ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError("add: shape mismatch");
    ComplexMatrix r = a;
    kernels::axpy(r.size(), 1.0, b.data(), r.data());
    return r;
}

ComplexMatrix subtract(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError("subtract: shape mismatch");
    ComplexMatrix r = a;
    kernels::axpy(r.size(), -1.0, b.data(), r.data());
    return r;
}

ComplexMatrix scale(const ComplexMatrix &a, cplx factor) {
    ComplexMatrix r = a;
    kernels::scal(r.size(), factor, r.data());
    return r;
}

cplx trace(const ComplexMatrix &a) {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

double max_abs(const ComplexMatrix &a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i]));
    return m;
}

double frobenius_norm(const ComplexMatrix &a) {
    return std::sqrt(kernels::nrm2sq(a.size(), a.data()));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t entries = a.size() * b.size();
    if (entries > 10'000'000) {
        throw SizeLimitError("kron: result would exceed 10^7 entries");
    }
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia) {
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const cplx f = a(ia, ja);
            if (f == cplx{}) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib) {
                cplx *dst = r.row(ia * b.rows() + ib) + ja * b.cols();
                kernels::axpy(b.cols(), f, b.row(ib), dst);
            }
        }
    }
    return r;
}

ComplexMatrix matvec_to_matrix(const StateVector &v) {
    ComplexMatrix m(v.dim(), 1);
    for (std::size_t i = 0; i < v.dim(); ++i) m(i, 0) = v.amplitudes[i];
    return m;
}

ComplexMatrix outer(const StateVector &ket, const StateVector &bra) {
    ComplexMatrix m(ket.dim(), bra.dim());
    for (std::size_t i = 0; i < ket.dim(); ++i) {
        for (std::size_t j = 0; j < bra.dim(); ++j) {
            m(i, j) = ket.amplitudes[i] * std::conj(bra.amplitudes[j]);
        }
    }
    return m;
}

StateVector apply(const ComplexMatrix &m, const StateVector &v) {
    if (m.cols() != v.dim()) throw PreconditionError("apply: shape mismatch");
    StateVector out(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const cplx vj = v.amplitudes[j];
        if (vj == cplx{}) continue;
        // column j of m has stride cols; accumulate scalar-wise
        for (std::size_t i = 0; i < m.rows(); ++i) out.amplitudes[i] += m(i, j) * vj;
    }
    return out;
}

cplx dot_conj(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) throw PreconditionError("dot_conj: dimension mismatch");
    return kernels::cdotc(a.dim(), a.amplitudes.data(), b.amplitudes.data());
}

} // namespace ttnrep
