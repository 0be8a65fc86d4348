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

#include "mdr/mdr_theory.hpp"

#include <algorithm>
#include <cmath>

namespace mdr {

namespace {

constexpr double kVerdictSlack = 1e-9;

ComplexMatrix joint_input(const MeasurementModel& m, const DensityState& rho) {
    if (rho.matrix.dim() != m.signal_dim) {
        throw DimensionMismatch("signal state does not match signal_dim");
    }
    return tensor(rho.matrix, m.meter_state.matrix);
}

/// sqrt(<(U^dag F U - G)^2>) averaged over channel branches.
double rms_operator_difference(const MeasurementModel& m,
                               const DensityState& rho,
                               const ComplexMatrix& final_op,
                               const ComplexMatrix& initial_op) {
    const ComplexMatrix input = joint_input(m, rho);
    double radicand = 0.0;
    for (const MixedUnitaryChannel::Branch& br : m.interaction.branches) {
        const ComplexMatrix diff =
            br.unitary.adjoint() * final_op * br.unitary - initial_op;
        radicand += br.prob * expectation(diff * diff, input);
    }
    if (radicand < -1e-12) {
        throw NegativeVariance("negative RMS radicand " +
                               std::to_string(radicand));
    }
    return std::sqrt(std::max(0.0, radicand));
}

}  // namespace

void MeasurementModel::validate(double tol) const {
    if (interaction.dim() != signal_dim * meter_dim) {
        throw DimensionMismatch("interaction does not act on signal x meter");
    }
    interaction.validate(tol);
    if (meter_state.matrix.dim() != meter_dim) {
        throw DimensionMismatch("meter state dimension mismatch");
    }
    if (meter_readout.matrix.dim() != meter_dim) {
        throw DimensionMismatch("meter readout dimension mismatch");
    }
    if (measured_obs.matrix.dim() != signal_dim ||
        disturbed_obs.matrix.dim() != signal_dim) {
        throw DimensionMismatch("signal observable dimension mismatch");
    }
}

bool MeasurementModel::spectra_compatible(double group_tol) const {
    const auto& ma = measured_obs.spectrum.branches;
    const auto& mm = meter_readout.spectrum.branches;
    if (ma.size() != mm.size()) return false;
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if (std::abs(ma[i].value - mm[i].value) > group_tol) return false;
    }
    return true;
}

MeasurementModel MeasurementModel::qubit_example(double theta) {
    return qubit_example_noisy(theta, 0.0);
}

MeasurementModel MeasurementModel::qubit_example_noisy(double theta,
                                                       double noise_p) {
    MeasurementModel m;
    m.signal_dim = 2;
    m.meter_dim = 2;
    if (noise_p == 0.0) {
        m.interaction = MixedUnitaryChannel::from_unitary(gates::cnot());
    } else {
        m.interaction = MixedUnitaryChannel{
            {{1.0 - noise_p, gates::cnot()},
             {noise_p / 2.0, ComplexMatrix::identity(4)},
             {noise_p / 2.0, gates::swap_gate()}}};
    }
    m.meter_state = states::meter_theta(theta);
    m.meter_readout = Observable::from_matrix(gates::pauli_z());
    m.measured_obs = Observable::from_matrix(gates::pauli_z());
    m.disturbed_obs = Observable::from_matrix(gates::pauli_x());
    return m;
}

double WeakJointTable::total() const {
    double acc = 0.0;
    for (double e : entries) acc += e;
    return acc;
}

double WeakJointTable::final_marginal(std::size_t f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < initial_values.size(); ++i) acc += at(i, f);
    return acc;
}

double epsilon_direct(const MeasurementModel& m, const DensityState& rho) {
    const ComplexMatrix eye_signal = ComplexMatrix::identity(m.signal_dim);
    const ComplexMatrix eye_meter = ComplexMatrix::identity(m.meter_dim);
    return rms_operator_difference(m, rho,
                                   tensor(eye_signal, m.meter_readout.matrix),
                                   tensor(m.measured_obs.matrix, eye_meter));
}

double eta_direct(const MeasurementModel& m, const DensityState& rho) {
    const ComplexMatrix eye_meter = ComplexMatrix::identity(m.meter_dim);
    const ComplexMatrix b = tensor(m.disturbed_obs.matrix, eye_meter);
    return rms_operator_difference(m, rho, b, b);
}

WeakJointTable weak_joint(const MeasurementModel& m, const DensityState& rho,
                          WeakMode mode) {
    const ComplexMatrix eye_signal = ComplexMatrix::identity(m.signal_dim);
    const ComplexMatrix eye_meter = ComplexMatrix::identity(m.meter_dim);

    const SpectralDecomposition& initial_spec =
        (mode == WeakMode::kDisturbance) ? m.disturbed_obs.spectrum
                                         : m.measured_obs.spectrum;
    const SpectralDecomposition& final_spec =
        (mode == WeakMode::kDisturbance) ? m.disturbed_obs.spectrum
                                         : m.meter_readout.spectrum;
    if (mode == WeakMode::kPrecision && !m.spectra_compatible()) {
        throw SpectrumMismatch(
            "precision mode requires M and A to share a spectrum");
    }

    WeakJointTable table;
    for (const SpectralBranch& b : initial_spec.branches) {
        table.initial_values.push_back(b.value);
    }
    for (const SpectralBranch& b : final_spec.branches) {
        table.final_values.push_back(b.value);
    }
    table.entries.assign(table.initial_values.size() *
                             table.final_values.size(),
                         0.0);

    const ComplexMatrix input = joint_input(m, rho);
    for (std::size_t i = 0; i < initial_spec.branches.size(); ++i) {
        // Initial projector always acts on the signal.
        const ComplexMatrix init_proj =
            tensor(initial_spec.branches[i].projector, eye_meter);
        for (std::size_t f = 0; f < final_spec.branches.size(); ++f) {
            const ComplexMatrix final_proj =
                (mode == WeakMode::kDisturbance)
                    ? tensor(final_spec.branches[f].projector, eye_meter)
                    : tensor(eye_signal, final_spec.branches[f].projector);
            double entry = 0.0;
            for (const MixedUnitaryChannel::Branch& br :
                 m.interaction.branches) {
                const Complex t = (final_proj * br.unitary * init_proj *
                                   input * br.unitary.adjoint())
                                      .trace();
                entry += br.prob * t.real();
            }
            table.at(i, f) = entry;
        }
    }
    return table;
}

WeakDeltaDistribution delta_distribution(const WeakJointTable& t,
                                         double bin_tol) {
    struct Term {
        double delta;
        double weight;
    };
    std::vector<Term> terms;
    for (std::size_t i = 0; i < t.initial_values.size(); ++i) {
        for (std::size_t f = 0; f < t.final_values.size(); ++f) {
            terms.push_back(
                {t.final_values[f] - t.initial_values[i], t.at(i, f)});
        }
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.delta < b.delta; });

    WeakDeltaDistribution d;
    std::size_t k = 0;
    while (k < terms.size()) {
        std::size_t end = k + 1;
        double weight = terms[k].weight;
        while (end < terms.size() &&
               terms[end].delta - terms[end - 1].delta < bin_tol) {
            weight += terms[end].weight;
            ++end;
        }
        // Representative delta: weight-agnostic mean of the merged bin.
        double delta = 0.0;
        for (std::size_t m = k; m < end; ++m) delta += terms[m].delta;
        d.deltas.push_back(delta / static_cast<double>(end - k));
        d.weights.push_back(weight);
        k = end;
    }
    return d;
}

double rms_of_delta(const WeakDeltaDistribution& d) {
    double moment = 0.0;
    for (std::size_t i = 0; i < d.deltas.size(); ++i) {
        moment += d.deltas[i] * d.deltas[i] * d.weights[i];
    }
    if (moment < -1e-12) {
        throw NegativeMoment("second moment " + std::to_string(moment));
    }
    return std::sqrt(std::max(0.0, moment));
}

MdrReport mdr_report(const MeasurementModel& m, const DensityState& rho) {
    MdrReport r;
    r.epsilon = epsilon_direct(m, rho);
    r.eta = eta_direct(m, rho);
    r.sigma_a = std_dev(m.measured_obs, rho);
    r.sigma_b = std_dev(m.disturbed_obs, rho);
    r.c = commutator_bound(m.measured_obs, m.disturbed_obs, rho);
    r.h = r.epsilon * r.eta;
    r.o = r.h + r.epsilon * r.sigma_b + r.sigma_a * r.eta;
    r.heisenberg_holds = (r.h >= r.c - kVerdictSlack);
    r.ozawa_holds = (r.o >= r.c - kVerdictSlack);
    return r;
}

}  // namespace mdr
