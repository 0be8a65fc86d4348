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

#include <array>
#include <cstdint>

#include "mdr/mdr_theory.hpp"

namespace mdr {

inline constexpr double kStrengthMin = 1e-3;

enum class ProbeBasis { kZ, kX };
enum class ExperimentMode { kDisturbance, kPrecision };

/// Weakly coupled probe qubit prepared as gamma|0> + gammabar|1>.
/// The coupling strength 2*gamma^2 - 1 must stay above kStrengthMin.
struct ProbeSpec {
    double gamma_sq = 0.75;
    ProbeBasis basis = ProbeBasis::kX;

    double gamma() const;
    double gamma_bar() const;
    double strength() const { return 2.0 * gamma_sq - 1.0; }
    void validate() const;
};

/// One run of the three-qubit protocol (probe x signal x meter).
struct ExperimentConfig {
    double theta = 0.0;
    ProbeSpec probe;
    ExperimentMode mode = ExperimentMode::kDisturbance;
    double noise_p = 0.0;  // applied identically to both CNOT gates
    std::uint64_t shots = 0;  // 0 = exact probabilities
    std::uint64_t seed = 0;
    DensityState signal_state = states::y_plus();

    static ExperimentConfig make(double theta, double gamma_sq,
                                 ExperimentMode mode, double noise_p = 0.0,
                                 std::uint64_t shots = 0,
                                 std::uint64_t seed = 0);

    void validate() const;
    /// 64-bit digest of all physical parameters; mixed with the seed so
    /// distinct configurations sample distinct streams.
    std::uint64_t digest() const;
};

/// Joint statistics over (Z_p, F) with F the final signal X readout
/// (disturbance) or the meter Z readout (precision). Index 0 is outcome +1,
/// index 1 is outcome -1; entry layout is [zp_index * 2 + f_index].
struct OutcomeTable {
    std::array<double, 4> values{};
    std::uint64_t shots = 0;  // 0 = exact probabilities, else counts

    double& at(int zp_index, int f_index) {
        return values[static_cast<std::size_t>(zp_index * 2 + f_index)];
    }
    double at(int zp_index, int f_index) const {
        return values[static_cast<std::size_t>(zp_index * 2 + f_index)];
    }
    double total() const { return values[0] + values[1] + values[2] + values[3]; }
};

/// Gate sequence on probe x signal x meter, in application order.
std::vector<MixedUnitaryChannel> build_circuit(const ExperimentConfig& cfg);

/// probe(gamma) x signal x meter(theta) product input.
DensityState initial_state(const ExperimentConfig& cfg);

OutcomeTable exact_outcomes(const ExperimentConfig& cfg);

/// Draws cfg.shots i.i.d. samples from the exact distribution with a
/// counter-based generator keyed by (seed, config digest). Identical
/// configurations give identical counts.
OutcomeTable sample_shots(const ExperimentConfig& cfg);

struct Reconstruction {
    double value = 0.0;        // clamped eta-hat or epsilon-hat
    double squared_raw = 0.0;  // unclamped 4*(P_wv(+2) + P_wv(-2))
    double pwv_delta_plus = 0.0;
    double pwv_delta_minus = 0.0;
    /// Weak-valued joint over (initial, final), layout [init_index*2+f_index]
    /// with index 0 = +1. Values may lie outside [0,1]; nothing is clamped
    /// except the final squared quantity.
    std::array<double, 4> weak_joint{};
};

/// Recovers eta (disturbance mode) or epsilon (precision mode) from outcome
/// statistics alone, via the weak-valued conditional probabilities.
Reconstruction reconstruct(const ExperimentConfig& cfg, const OutcomeTable& t);

struct ClosedFormReference {
    double epsilon;
    double eta;
    double h;
    double o;
    double c;
};

/// The ideal qubit apparatus in closed form: epsilon = 2|sin theta|,
/// eta = sqrt(2)|cos theta - sin theta|, with sigma(X) = sigma(Z) = C = 1
/// for the Y-eigenstate input.
ClosedFormReference closed_form_reference(double theta);

}  // namespace mdr
