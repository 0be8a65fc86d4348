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

#include "mdr/qmodel.hpp"

#include <cmath>
#include <numeric>

namespace mdr {

DensityState DensityState::pure(const std::vector<Complex>& amplitudes) {
    double norm2 = 0.0;
    for (const Complex& a : amplitudes) norm2 += std::norm(a);
    if (norm2 <= 0.0) {
        throw InvalidState("pure state amplitudes are all zero");
    }
    std::vector<Complex> scaled = amplitudes;
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& a : scaled) a *= inv;
    return DensityState{ComplexMatrix::outer(scaled), {amplitudes.size()}};
}

void DensityState::validate(double tol) const {
    std::size_t prod = 1;
    for (std::size_t d : dims) prod *= d;
    if (prod != matrix.dim()) {
        throw InvalidState("subsystem dims do not multiply to matrix dim");
    }
    if (!matrix.is_hermitian(tol)) {
        throw InvalidState("density matrix is not Hermitian");
    }
    if (std::abs(matrix.trace() - Complex(1.0, 0.0)) > 1e-12) {
        throw InvalidState("density matrix trace differs from 1");
    }
    const SpectralDecomposition sd = eig_hermitian(matrix);
    if (sd.branches.front().value < -1e-10) {
        throw InvalidState("density matrix has a negative eigenvalue");
    }
}

DensityState tensor(const DensityState& a, const DensityState& b) {
    DensityState out{tensor(a.matrix, b.matrix), a.dims};
    out.dims.insert(out.dims.end(), b.dims.begin(), b.dims.end());
    return out;
}

Observable Observable::from_matrix(const ComplexMatrix& m, double group_tol) {
    return Observable{m, eig_hermitian(m, group_tol)};
}

MixedUnitaryChannel MixedUnitaryChannel::from_unitary(ComplexMatrix u) {
    return MixedUnitaryChannel{{{1.0, std::move(u)}}};
}

std::size_t MixedUnitaryChannel::dim() const {
    return branches.empty() ? 0 : branches.front().unitary.dim();
}

void MixedUnitaryChannel::validate(double tol) const {
    if (branches.empty()) {
        throw InvalidState("channel has no branches");
    }
    double total = 0.0;
    for (const Branch& b : branches) {
        if (b.prob < 0.0 || b.prob > 1.0) {
            throw InvalidState("branch probability outside [0,1]");
        }
        total += b.prob;
        if (b.unitary.dim() != dim()) {
            throw DimensionMismatch("channel branches have mixed dimensions");
        }
        if (!b.unitary.is_unitary(tol)) {
            throw InvalidState("channel branch is not unitary");
        }
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvalidState("branch probabilities do not sum to 1");
    }
}

double std_dev(const Observable& a, const DensityState& rho) {
    const double mean = expectation(a.matrix, rho.matrix);
    const double second = expectation(a.matrix * a.matrix, rho.matrix);
    const double radicand = second - mean * mean;
    if (radicand < -1e-12) {
        throw NegativeVariance("variance radicand " + std::to_string(radicand));
    }
    return std::sqrt(std::max(0.0, radicand));
}

double commutator_bound(const Observable& a, const Observable& b,
                        const DensityState& rho) {
    const ComplexMatrix comm = a.matrix * b.matrix - b.matrix * a.matrix;
    return 0.5 * std::abs((rho.matrix * comm).trace());
}

DensityState apply_channel(const MixedUnitaryChannel& ch,
                           const DensityState& rho) {
    if (ch.dim() != rho.matrix.dim()) {
        throw DimensionMismatch("channel and state dimensions differ");
    }
    ComplexMatrix acc(rho.matrix.dim());
    for (const MixedUnitaryChannel::Branch& b : ch.branches) {
        acc = acc + (b.unitary * rho.matrix * b.unitary.adjoint())
                        .scaled(b.prob);
    }
    return DensityState{acc, rho.dims};
}

namespace gates {

ComplexMatrix identity2() { return ComplexMatrix::identity(2); }

ComplexMatrix pauli_x() {
    return ComplexMatrix::from_rows({{0, 1}, {1, 0}});
}

ComplexMatrix pauli_y() {
    return ComplexMatrix::from_rows({{0, Complex(0, -1)}, {Complex(0, 1), 0}});
}

ComplexMatrix pauli_z() {
    return ComplexMatrix::from_rows({{1, 0}, {0, -1}});
}

ComplexMatrix hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::from_rows({{h, h}, {h, -h}});
}

ComplexMatrix cnot() {
    return ComplexMatrix::from_rows({{1, 0, 0, 0},
                                     {0, 1, 0, 0},
                                     {0, 0, 0, 1},
                                     {0, 0, 1, 0}});
}

ComplexMatrix swap_gate() {
    return ComplexMatrix::from_rows({{1, 0, 0, 0},
                                     {0, 0, 1, 0},
                                     {0, 1, 0, 0},
                                     {0, 0, 0, 1}});
}

}  // namespace gates

namespace states {

DensityState z_plus() { return DensityState::pure({1.0, 0.0}); }

DensityState z_minus() { return DensityState::pure({0.0, 1.0}); }

DensityState y_plus() {
    return DensityState::pure({Complex(1.0, 0.0), Complex(0.0, 1.0)});
}

DensityState meter_theta(double theta) {
    return DensityState::pure({std::cos(theta), std::sin(theta)});
}

}  // namespace states

}  // namespace mdr
