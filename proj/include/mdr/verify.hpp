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

#include <string>
#include <vector>

#include "mdr/experiment.hpp"
#include "mdr/random.hpp"

namespace mdr {

struct SuiteResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Seeded random measurement model: Haar interaction, random signal and
/// meter states, signal observables with small-integer spectra in random
/// bases. A and M share an eigenvalue set so precision mode is available.
MeasurementModel random_model(std::size_t signal_dim, std::size_t meter_dim,
                              Rng& rng);

/// Random full-rank signal state matching the model.
DensityState random_signal_state(const MeasurementModel& m, Rng& rng);

struct VerifyOptions {
    std::uint64_t seed = 20260824;
    int instances = 100;
    /// Test hook: skews one instance so the identity suites must fail.
    bool inject_corruption = false;
};

/// Runs the weak-value identity suites over random models and the
/// operational round-trip suites over the three-qubit protocol.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace mdr
