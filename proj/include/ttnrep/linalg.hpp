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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ttnrep/config.hpp"

namespace ttnrep {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Tensor legs use the convention that the
/// leftmost factor is the slowest-varying index, so a map into C^d (x) C^d
/// stores the (a,b) output pair at row a*d + b.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    cplx &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cplx *row(std::size_t i) { return data_.data() + i * cols_; }
    const cplx *row(std::size_t i) const { return data_.data() + i * cols_; }

    cplx *data() { return data_.data(); }
    const cplx *data() const { return data_.data(); }

    bool all_finite() const;

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

/// Complex vector with its dimension. Norm is reported, never silently fixed.
struct StateVector {
    std::vector<cplx> amplitudes;

    StateVector() = default;
    explicit StateVector(std::size_t dim) : amplitudes(dim) {}
    explicit StateVector(std::vector<cplx> amps) : amplitudes(std::move(amps)) {}

    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amplitudes.size(); }
    double norm() const;
    bool all_finite() const;

    friend bool operator==(const StateVector &, const StateVector &) = default;
};

/// The coarse-graining map V: C^d -> C^d (x) C^d as a d^2 x d matrix.
class Isometry {
  public:
    /// Validates V†V = I within `tol` (throws PreconditionError otherwise).
    static Isometry from_matrix(std::size_t d, ComplexMatrix m, double tol = 1e-12);

    std::size_t d() const { return d_; }
    const ComplexMatrix &matrix() const { return m_; }

    /// P = V V†, the orthogonal projector onto the image subspace.
    ComplexMatrix projector() const;

  private:
    Isometry(std::size_t d, ComplexMatrix m) : d_(d), m_(std::move(m)) {}
    std::size_t d_ = 0;
    ComplexMatrix m_;
};

// -- basic algebra ----------------------------------------------------------

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &a);
ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix subtract(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix scale(const ComplexMatrix &a, cplx factor);
cplx trace(const ComplexMatrix &a);
double max_abs(const ComplexMatrix &a);
double frobenius_norm(const ComplexMatrix &a);

/// Kronecker product with index convention (i_A i_B, j_A j_B).
/// Throws SizeLimitError above 10^7 entries.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix matvec_to_matrix(const StateVector &v);       // column
ComplexMatrix outer(const StateVector &ket, const StateVector &bra); // |ket><bra|
StateVector apply(const ComplexMatrix &m, const StateVector &v);
cplx dot_conj(const StateVector &a, const StateVector &b); // <a, b>, conj-linear in a

// -- decompositions ---------------------------------------------------------

/// Largest singular value via full one-sided Jacobi SVD.
/// Throws PreconditionError on non-finite input.
double operator_norm(const ComplexMatrix &m);

/// All singular values, descending.
std::vector<double> singular_values(const ComplexMatrix &m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix &m);

struct Eigensystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // eigenvector i in column i
};

/// Cyclic Jacobi diagonalization. Input must be Hermitian within
/// `hermiticity_tol` (relative to the largest entry), else PreconditionError.
Eigensystem hermitian_eigensystem(const ComplexMatrix &m, double hermiticity_tol = 1e-10);

// -- sampling ---------------------------------------------------------------

/// First d columns of a Haar-distributed unitary on C^{d^2}: orthonormalized
/// i.i.d. complex Gaussians with positive-diagonal triangular factor, so the
/// sample is unique and bitwise reproducible for a given seed.
Isometry haar_isometry(std::size_t d, std::uint64_t seed);

/// Haar-distributed unitary on C^n (the same construction, square case).
ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed);

} // namespace ttnrep
