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

#include "mdr/qmodel.hpp"

namespace mdr {

/// Signal-meter measurement apparatus: meter preparation, interaction,
/// meter readout, plus the signal observables under study (A measured,
/// B disturbed). The interaction is a mixed-unitary channel; the ideal
/// apparatus is the single-branch case.
struct MeasurementModel {
    std::size_t signal_dim = 0;
    std::size_t meter_dim = 0;
    MixedUnitaryChannel interaction;
    DensityState meter_state;
    Observable meter_readout;
    Observable measured_obs;
    Observable disturbed_obs;

    void validate(double tol = kDefaultTol) const;

    /// True when the eigenvalue sets of M and A coincide within group_tol.
    bool spectra_compatible(double group_tol = kDefaultGroupTol) const;

    /// The ideal qubit apparatus: A = Z, B = X, U = CNOT(signal -> meter),
    /// M = Z on the meter, meter state cos(theta)|0> + sin(theta)|1>.
    static MeasurementModel qubit_example(double theta);
    /// Same with the CNOT replaced by the non-ideal mixture
    /// {1-p: CNOT, p/2: I, p/2: SWAP}.
    static MeasurementModel qubit_example_noisy(double theta, double noise_p);
};

enum class WeakMode { kDisturbance, kPrecision };

/// Weak-valued joint quasi-probability over (initial value, final value).
/// Entries may be negative; they sum to 1.
struct WeakJointTable {
    std::vector<double> initial_values;
    std::vector<double> final_values;
    std::vector<double> entries;  // row-major [initial][final]

    double& at(std::size_t i, std::size_t f) {
        return entries[i * final_values.size() + f];
    }
    double at(std::size_t i, std::size_t f) const {
        return entries[i * final_values.size() + f];
    }
    double total() const;
    /// Sum over initial values for one final value.
    double final_marginal(std::size_t f) const;
};

/// Quasi-probability over the change delta = final - initial.
struct WeakDeltaDistribution {
    std::vector<double> deltas;
    std::vector<double> weights;
};

struct MdrReport {
    double epsilon = 0.0;
    double eta = 0.0;
    double sigma_a = 0.0;
    double sigma_b = 0.0;
    double c = 0.0;
    double h = 0.0;
    double o = 0.0;
    bool heisenberg_holds = false;
    bool ozawa_holds = false;
};

/// Measurement precision: RMS difference between the initial value of A
/// and the final meter readout, computed from the operator definition over
/// rho (x) mu. Mixed-unitary interactions average the trace over branches.
double epsilon_direct(const MeasurementModel& m, const DensityState& rho);

/// Disturbance of B: RMS difference between initial and final values of B.
double eta_direct(const MeasurementModel& m, const DensityState& rho);

/// Weak-valued joint distribution. Disturbance mode pairs initial and final
/// projectors of B on the signal; precision mode pairs initial projectors of
/// A on the signal with final projectors of M on the meter (which requires
/// matching spectra).
WeakJointTable weak_joint(const MeasurementModel& m, const DensityState& rho,
                          WeakMode mode);

/// Aggregates a joint table by delta = final - initial; deltas closer than
/// bin_tol merge into one bin.
WeakDeltaDistribution delta_distribution(const WeakJointTable& t,
                                         double bin_tol = kDefaultGroupTol);

/// sqrt(sum delta^2 w(delta)). Throws NegativeMoment if the second moment
/// is below -1e-12.
double rms_of_delta(const WeakDeltaDistribution& d);

/// Full report: epsilon, eta, the initial-state SDs, the commutator bound,
/// and the verdicts for both measurement-disturbance relations.
MdrReport mdr_report(const MeasurementModel& m, const DensityState& rho);

}  // namespace mdr
