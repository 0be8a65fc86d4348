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

#include <cstdint>

#include "mdr/qmath.hpp"

namespace mdr {

/// splitmix64 finalizer; statistically strong enough for simulation use.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// i-th uniform in [0,1) of the counter-based stream with the given key.
inline double counter_uniform(std::uint64_t key, std::uint64_t counter) {
    const std::uint64_t bits = mix64(key + counter * 0x9e3779b97f4a7c15ull);
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Sequential convenience wrapper over the counter stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(mix64(seed)) {}

    double uniform() { return counter_uniform(key_, counter_++); }

    /// Standard normal via Box-Muller.
    double normal();

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-distributed unitary: orthonormalization of a complex Gaussian matrix.
ComplexMatrix haar_unitary(std::size_t dim, Rng& rng);

/// G G^dagger / Tr for complex Gaussian G; full rank almost surely.
ComplexMatrix random_density(std::size_t dim, Rng& rng);

/// (G + G^dagger)/2 for complex Gaussian G.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Hermitian operator with the given eigenvalues (repetition allowed)
/// in a Haar-random eigenbasis.
ComplexMatrix hermitian_with_spectrum(const std::vector<double>& eigenvalues,
                                      Rng& rng);

}  // namespace mdr
