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

#include "mdr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mdr {

namespace {

/// Distinct small integers, each used at least once, padded randomly.
std::vector<double> integer_spectrum(std::size_t dim,
                                     std::size_t distinct_count, Rng& rng) {
    std::vector<double> pool = {-3, -2, -1, 0, 1, 2, 3};
    // Fisher-Yates prefix shuffle to pick the distinct values.
    for (std::size_t i = 0; i < distinct_count; ++i) {
        const std::size_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    std::vector<double> values(pool.begin(),
                               pool.begin() + static_cast<long>(distinct_count));
    while (values.size() < dim) {
        values.push_back(values[rng.below(distinct_count)]);
    }
    return values;
}

}  // namespace

MeasurementModel random_model(std::size_t signal_dim, std::size_t meter_dim,
                              Rng& rng) {
    MeasurementModel m;
    m.signal_dim = signal_dim;
    m.meter_dim = meter_dim;
    m.interaction = MixedUnitaryChannel::from_unitary(
        haar_unitary(signal_dim * meter_dim, rng));
    m.meter_state = DensityState{random_density(meter_dim, rng), {meter_dim}};

    // A on the signal and M on the meter share an eigenvalue set, so both
    // weak-joint modes are constructible.
    const std::size_t distinct =
        2 + rng.below(std::min(signal_dim, meter_dim) - 1);
    std::vector<double> shared = integer_spectrum(signal_dim, distinct, rng);
    m.measured_obs = Observable::from_matrix(hermitian_with_spectrum(shared, rng));
    std::vector<double> meter_values(shared.begin(),
                                     shared.begin() + static_cast<long>(distinct));
    while (meter_values.size() < meter_dim) {
        meter_values.push_back(meter_values[rng.below(distinct)]);
    }
    m.meter_readout =
        Observable::from_matrix(hermitian_with_spectrum(meter_values, rng));
    m.disturbed_obs = Observable::from_matrix(
        hermitian_with_spectrum(integer_spectrum(signal_dim, distinct, rng), rng));
    return m;
}

DensityState random_signal_state(const MeasurementModel& m, Rng& rng) {
    return DensityState{random_density(m.signal_dim, rng), {m.signal_dim}};
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    Rng rng(options.seed);

    SuiteResult disturbance_identity{"weak-value identity (disturbance)", 0.0,
                                     1e-9, false};
    SuiteResult precision_identity{"weak-value identity (precision)", 0.0,
                                   1e-9, false};
    SuiteResult normalization{"weak joint table normalization", 0.0, 1e-10,
                              false};
    SuiteResult ozawa{"Ozawa MDR validity", 0.0, 1e-9, false};

    for (int k = 0; k < options.instances; ++k) {
        const std::size_t signal_dim = 2 + rng.below(3);
        const std::size_t meter_dim = 2 + rng.below(3);
        MeasurementModel m = random_model(signal_dim, meter_dim, rng);
        if (options.inject_corruption && k == 0) {
            // Skew the interaction away from unitarity behind the contract
            // checks: the identity suites must then report a violation.
            ComplexMatrix& u = m.interaction.branches.front().unitary;
            u(0, 0) += 0.05;
        }
        const DensityState rho = random_signal_state(m, rng);

        const WeakJointTable dist_table =
            weak_joint(m, rho, WeakMode::kDisturbance);
        const WeakJointTable prec_table =
            weak_joint(m, rho, WeakMode::kPrecision);
        normalization.max_deviation =
            std::max({normalization.max_deviation,
                      std::abs(dist_table.total() - 1.0),
                      std::abs(prec_table.total() - 1.0)});

        const double eta_wv = rms_of_delta(delta_distribution(dist_table));
        const double eps_wv = rms_of_delta(delta_distribution(prec_table));
        disturbance_identity.max_deviation =
            std::max(disturbance_identity.max_deviation,
                     std::abs(eta_wv - eta_direct(m, rho)));
        precision_identity.max_deviation =
            std::max(precision_identity.max_deviation,
                     std::abs(eps_wv - epsilon_direct(m, rho)));

        const MdrReport report = mdr_report(m, rho);
        ozawa.max_deviation =
            std::max(ozawa.max_deviation, std::max(0.0, report.c - report.o));
    }

    SuiteResult round_trip{"operational round trip (p = 0)", 0.0, 1e-9, false};
    SuiteResult invariance{"strength invariance (p up to 0.2)", 0.0, 1e-9,
                           false};
    const double gamma_sqs[] = {0.51, 0.6, 0.75, 0.9, 1.0};
    const int theta_points = 21;
    for (int i = 0; i < theta_points; ++i) {
        const double theta = (std::numbers::pi / 2.0) * i / (theta_points - 1);
        const MeasurementModel ideal = MeasurementModel::qubit_example(theta);
        const DensityState rho = states::y_plus();
        const double eta_ref = eta_direct(ideal, rho);
        const double eps_ref = epsilon_direct(ideal, rho);
        for (const double p : {0.0, 0.1, 0.2}) {
            double eta_first = 0.0, eps_first = 0.0;
            bool first = true;
            for (const double gsq : gamma_sqs) {
                const ExperimentConfig eta_cfg = ExperimentConfig::make(
                    theta, gsq, ExperimentMode::kDisturbance, p);
                const ExperimentConfig eps_cfg = ExperimentConfig::make(
                    theta, gsq, ExperimentMode::kPrecision, p);
                const double eta_hat =
                    reconstruct(eta_cfg, exact_outcomes(eta_cfg)).value;
                const double eps_hat =
                    reconstruct(eps_cfg, exact_outcomes(eps_cfg)).value;
                if (p == 0.0) {
                    round_trip.max_deviation =
                        std::max({round_trip.max_deviation,
                                  std::abs(eta_hat - eta_ref),
                                  std::abs(eps_hat - eps_ref)});
                }
                if (first) {
                    eta_first = eta_hat;
                    eps_first = eps_hat;
                    first = false;
                } else {
                    invariance.max_deviation =
                        std::max({invariance.max_deviation,
                                  std::abs(eta_hat - eta_first),
                                  std::abs(eps_hat - eps_first)});
                }
            }
        }
    }

    std::vector<SuiteResult> results = {disturbance_identity,
                                        precision_identity,
                                        normalization,
                                        ozawa,
                                        round_trip,
                                        invariance};
    for (SuiteResult& r : results) {
        r.pass = (r.max_deviation <= r.tolerance);
    }
    return results;
}

}  // namespace mdr
