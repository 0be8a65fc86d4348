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

#include <vector>

#include "mdr/qmath.hpp"

namespace mdr {

/// Density matrix plus the subsystem dimensions it factors over.
struct DensityState {
    ComplexMatrix matrix;
    std::vector<std::size_t> dims;

    /// Normalized pure state |v⟩⟨v| on a single subsystem.
    static DensityState pure(const std::vector<Complex>& amplitudes);

    /// Throws InvalidState if not Hermitian / unit-trace / PSD.
    void validate(double tol = kDefaultTol) const;
};

/// Product state on the concatenated subsystem list.
DensityState tensor(const DensityState& a, const DensityState& b);

/// Hermitian operator with its spectral decomposition attached.
struct Observable {
    ComplexMatrix matrix;
    SpectralDecomposition spectrum;

    static Observable from_matrix(const ComplexMatrix& m,
                                  double group_tol = kDefaultGroupTol);
};

/// Probability-weighted list of unitaries (e.g. the non-ideal CNOT).
struct MixedUnitaryChannel {
    struct Branch {
        double prob;
        ComplexMatrix unitary;
    };
    std::vector<Branch> branches;

    static MixedUnitaryChannel from_unitary(ComplexMatrix u);

    std::size_t dim() const;
    void validate(double tol = kDefaultTol) const;
};

/// sqrt(<A^2> - <A>^2); radicand within -1e-12 of zero is clamped.
double std_dev(const Observable& a, const DensityState& rho);

/// (1/2)|Tr(rho [A,B])|, the shared lower bound of both MDRs.
double commutator_bound(const Observable& a, const Observable& b,
                        const DensityState& rho);

/// Sum_k p_k U_k rho U_k^dagger.
DensityState apply_channel(const MixedUnitaryChannel& ch,
                           const DensityState& rho);

namespace gates {

ComplexMatrix identity2();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
/// Control is the first tensor factor, target the second.
ComplexMatrix cnot();
ComplexMatrix swap_gate();

}  // namespace gates

namespace states {

/// |0⟩⟨0|
DensityState z_plus();
/// |1⟩⟨1|
DensityState z_minus();
/// (|0⟩ + i|1⟩)/sqrt(2), the Y = +1 eigenstate.
DensityState y_plus();
/// cos(theta)|0⟩ + sin(theta)|1⟩
DensityState meter_theta(double theta);

}  // namespace states

}  // namespace mdr
