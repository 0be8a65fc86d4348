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

#include "mdr/experiment.hpp"

#include <bit>
#include <cmath>

#include "mdr/random.hpp"

namespace mdr {

namespace {

constexpr int kNumQubits = 3;
constexpr int kProbe = 0;
constexpr int kSignal = 1;
constexpr int kMeter = 2;

int bit_of(std::size_t index, int qubit) {
    return static_cast<int>((index >> (kNumQubits - 1 - qubit)) & 1u);
}

std::size_t with_bit(std::size_t index, int qubit, int value) {
    const std::size_t mask = std::size_t{1} << (kNumQubits - 1 - qubit);
    return value ? (index | mask) : (index & ~mask);
}

/// Embeds a single-qubit gate on one line of the three-qubit register.
ComplexMatrix embed_one(const ComplexMatrix& g, int qubit) {
    ComplexMatrix out(8);
    for (std::size_t col = 0; col < 8; ++col) {
        const int b = bit_of(col, qubit);
        for (int b2 = 0; b2 < 2; ++b2) {
            out(with_bit(col, qubit, b2), col) += g(b2, b);
        }
    }
    return out;
}

/// Embeds a two-qubit gate; g4 is indexed with qubit qa as the major bit.
ComplexMatrix embed_two(const ComplexMatrix& g4, int qa, int qb) {
    ComplexMatrix out(8);
    for (std::size_t col = 0; col < 8; ++col) {
        const int sub_in = bit_of(col, qa) * 2 + bit_of(col, qb);
        for (int sub_out = 0; sub_out < 4; ++sub_out) {
            const Complex amp = g4(sub_out, sub_in);
            if (amp == Complex{}) continue;
            std::size_t row = with_bit(col, qa, sub_out >> 1);
            row = with_bit(row, qb, sub_out & 1);
            out(row, col) += amp;
        }
    }
    return out;
}

/// Non-ideal CNOT: ideal with probability 1-p, identity with p/2, and a
/// swap of the two coupled qubits with p/2.
MixedUnitaryChannel noisy_cnot(int control, int target, double p) {
    const ComplexMatrix cx = embed_two(gates::cnot(), control, target);
    if (p == 0.0) return MixedUnitaryChannel::from_unitary(cx);
    return MixedUnitaryChannel{
        {{1.0 - p, cx},
         {p / 2.0, ComplexMatrix::identity(8)},
         {p / 2.0, embed_two(gates::swap_gate(), control, target)}}};
}

ComplexMatrix projector_on(const ComplexMatrix& one_qubit_proj, int qubit) {
    return embed_one(one_qubit_proj, qubit);
}

void hash_double(std::uint64_t& h, double v) {
    h = mix64(h ^ std::bit_cast<std::uint64_t>(v));
}

}  // namespace

double ProbeSpec::gamma() const { return std::sqrt(gamma_sq); }

double ProbeSpec::gamma_bar() const { return std::sqrt(1.0 - gamma_sq); }

void ProbeSpec::validate() const {
    if (!(gamma_sq > 0.5 && gamma_sq <= 1.0)) {
        throw InvalidState("gamma_sq must lie in (1/2, 1]");
    }
    if (strength() < kStrengthMin) {
        throw StrengthTooSmall("probe strength " + std::to_string(strength()) +
                               " below minimum " +
                               std::to_string(kStrengthMin));
    }
}

ExperimentConfig ExperimentConfig::make(double theta, double gamma_sq,
                                        ExperimentMode mode, double noise_p,
                                        std::uint64_t shots,
                                        std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.theta = theta;
    cfg.probe.gamma_sq = gamma_sq;
    cfg.probe.basis = (mode == ExperimentMode::kDisturbance) ? ProbeBasis::kX
                                                             : ProbeBasis::kZ;
    cfg.mode = mode;
    cfg.noise_p = noise_p;
    cfg.shots = shots;
    cfg.seed = seed;
    return cfg;
}

void ExperimentConfig::validate() const {
    probe.validate();
    const ProbeBasis expected = (mode == ExperimentMode::kDisturbance)
                                    ? ProbeBasis::kX
                                    : ProbeBasis::kZ;
    if (probe.basis != expected) {
        throw InvalidState("probe basis inconsistent with experiment mode");
    }
    if (noise_p < 0.0 || noise_p > 1.0) {
        throw InvalidState("noise_p must lie in [0,1]");
    }
    if (signal_state.matrix.dim() != 2) {
        throw DimensionMismatch("signal state must be a single qubit");
    }
}

std::uint64_t ExperimentConfig::digest() const {
    std::uint64_t h = 0x6d64726b69740000ull;
    hash_double(h, theta);
    hash_double(h, probe.gamma_sq);
    hash_double(h, noise_p);
    h = mix64(h ^ static_cast<std::uint64_t>(mode == ExperimentMode::kPrecision));
    h = mix64(h ^ shots);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            hash_double(h, signal_state.matrix(r, c).real());
            hash_double(h, signal_state.matrix(r, c).imag());
        }
    }
    return h;
}

std::vector<MixedUnitaryChannel> build_circuit(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<MixedUnitaryChannel> circuit;
    const ComplexMatrix h_signal = embed_one(gates::hadamard(), kSignal);
    if (cfg.mode == ExperimentMode::kDisturbance) {
        // Hadamards on the signal line turn the Z-coupled probe CNOT into a
        // weak X measurement. They are treated as ideal.
        circuit.push_back(MixedUnitaryChannel::from_unitary(h_signal));
        circuit.push_back(noisy_cnot(kSignal, kProbe, cfg.noise_p));
        circuit.push_back(MixedUnitaryChannel::from_unitary(h_signal));
    } else {
        circuit.push_back(noisy_cnot(kSignal, kProbe, cfg.noise_p));
    }
    circuit.push_back(noisy_cnot(kSignal, kMeter, cfg.noise_p));
    return circuit;
}

DensityState initial_state(const ExperimentConfig& cfg) {
    const DensityState probe =
        DensityState::pure({cfg.probe.gamma(), cfg.probe.gamma_bar()});
    return tensor(tensor(probe, cfg.signal_state),
                  states::meter_theta(cfg.theta));
}

OutcomeTable exact_outcomes(const ExperimentConfig& cfg) {
    DensityState state = initial_state(cfg);
    for (const MixedUnitaryChannel& ch : build_circuit(cfg)) {
        state = apply_channel(ch, state);
    }

    const ComplexMatrix p0 = ComplexMatrix::from_rows({{1, 0}, {0, 0}});
    const ComplexMatrix p1 = ComplexMatrix::from_rows({{0, 0}, {0, 1}});
    const ComplexMatrix half = ComplexMatrix::identity(2).scaled(0.5);
    const ComplexMatrix x_plus = half + gates::pauli_x().scaled(0.5);
    const ComplexMatrix x_minus = half - gates::pauli_x().scaled(0.5);

    // Index 0 = outcome +1, index 1 = outcome -1.
    const ComplexMatrix probe_proj[2] = {projector_on(p0, kProbe),
                                         projector_on(p1, kProbe)};
    const bool disturbance = (cfg.mode == ExperimentMode::kDisturbance);
    const ComplexMatrix final_proj[2] = {
        disturbance ? projector_on(x_plus, kSignal) : projector_on(p0, kMeter),
        disturbance ? projector_on(x_minus, kSignal)
                    : projector_on(p1, kMeter)};

    OutcomeTable table;
    for (int zp = 0; zp < 2; ++zp) {
        for (int f = 0; f < 2; ++f) {
            table.at(zp, f) =
                expectation(probe_proj[zp] * final_proj[f], state.matrix);
        }
    }
    table.shots = 0;
    return table;
}

OutcomeTable sample_shots(const ExperimentConfig& cfg) {
    if (cfg.shots < 1) {
        throw InvalidState("sample_shots requires shots >= 1");
    }
    const OutcomeTable exact = exact_outcomes(cfg);
    double cdf[4];
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
        acc += exact.values[static_cast<std::size_t>(k)];
        cdf[k] = acc;
    }
    cdf[3] = 1.0;  // guard against roundoff in the final bin

    const std::uint64_t key = mix64(cfg.seed ^ cfg.digest());
    OutcomeTable counts;
    counts.shots = cfg.shots;
    for (std::uint64_t i = 0; i < cfg.shots; ++i) {
        const double u = counter_uniform(key, i);
        int k = 0;
        while (k < 3 && u >= cdf[k]) ++k;
        counts.values[static_cast<std::size_t>(k)] += 1.0;
    }
    return counts;
}

Reconstruction reconstruct(const ExperimentConfig& cfg,
                           const OutcomeTable& t) {
    cfg.validate();
    const double strength = cfg.probe.strength();
    if (strength < kStrengthMin) {
        throw StrengthTooSmall("probe strength below reconstruction minimum");
    }
    const double total = t.total();
    if (total <= 0.0) {
        throw InvalidState("outcome table is empty");
    }

    Reconstruction r;
    for (int f = 0; f < 2; ++f) {
        const double p_joint_plus = t.at(0, f) / total;
        const double p_joint_minus = t.at(1, f) / total;
        const double marginal = p_joint_plus + p_joint_minus;
        // Sum_zp zp P(zp, f); dividing by the strength undoes the weak
        // coupling and yields the weak-valued joint quasi-probabilities.
        const double signed_sum = p_joint_plus - p_joint_minus;
        if (marginal == 0.0 && signed_sum != 0.0) {
            throw ZeroMarginal("degenerate post-selection branch");
        }
        r.weak_joint[static_cast<std::size_t>(0 * 2 + f)] =
            0.5 * (marginal + signed_sum / strength);
        r.weak_joint[static_cast<std::size_t>(1 * 2 + f)] =
            0.5 * (marginal - signed_sum / strength);
    }

    // delta = +2 is initial -1 followed by final +1; delta = -2 the reverse.
    r.pwv_delta_plus = r.weak_joint[1 * 2 + 0];
    r.pwv_delta_minus = r.weak_joint[0 * 2 + 1];
    r.squared_raw = 4.0 * (r.pwv_delta_plus + r.pwv_delta_minus);
    r.value = std::sqrt(std::max(0.0, r.squared_raw));
    return r;
}

ClosedFormReference closed_form_reference(double theta) {
    ClosedFormReference ref;
    ref.epsilon = 2.0 * std::abs(std::sin(theta));
    ref.eta = std::sqrt(2.0) * std::abs(std::cos(theta) - std::sin(theta));
    ref.h = ref.epsilon * ref.eta;
    ref.o = ref.h + ref.epsilon + ref.eta;  // sigma(X) = sigma(Z) = 1
    ref.c = 1.0;
    return ref;
}

}  // namespace mdr
