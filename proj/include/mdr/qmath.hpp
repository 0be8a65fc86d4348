// Copyright 2026 The mdrkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mdr/errors.hpp"

namespace mdr {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kDefaultGroupTol = 1e-8;

/// Dense square complex matrix, row-major. Immutable by convention once
/// built; all operations return new values.
class ComplexMatrix {
public:
    ComplexMatrix() : dim_(0) {}
    explicit ComplexMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix from_rows(
        std::initializer_list<std::initializer_list<Complex>> rows);
    /// Outer product |v⟩⟨v| of a (not necessarily normalized) column vector.
    static ComplexMatrix outer(const std::vector<Complex>& v);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t r, std::size_t c) {
        return entries_[r * dim_ + c];
    }
    const Complex& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * dim_ + c];
    }

    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix scaled(Complex factor) const;
    ComplexMatrix adjoint() const;

    Complex trace() const;
    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    /// Max-entry norm of (*this - other).
    double max_diff(const ComplexMatrix& other) const;
    double max_abs() const;

    bool is_hermitian(double tol = kDefaultTol) const;
    bool is_unitary(double tol = kDefaultTol) const;
    bool is_positive_semidefinite(double tol = kDefaultTol) const;
    bool is_projector(double tol = kDefaultTol) const;

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Kronecker product; block order is (a-index major, b-index minor).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

struct SpectralBranch {
    double value;
    ComplexMatrix projector;
};

/// Eigenvalue -> eigenspace projector table, eigenvalues strictly increasing.
struct SpectralDecomposition {
    std::vector<SpectralBranch> branches;
    std::size_t source_dim = 0;

    /// Sum of value_i * projector_i.
    ComplexMatrix reconstruct() const;
};

/// Diagonalizes a Hermitian matrix by cyclic Jacobi rotations and groups
/// eigenvalues closer than group_tol into a single degenerate branch.
/// Throws NotHermitian or NoConvergence.
SpectralDecomposition eig_hermitian(const ComplexMatrix& h,
                                    double group_tol = kDefaultGroupTol);

/// Re Tr(op * rho). Throws ImaginaryResidual if the imaginary part of the
/// trace exceeds 1e-9, which signals a non-Hermitian operand.
double expectation(const ComplexMatrix& op, const ComplexMatrix& rho);

}  // namespace mdr
