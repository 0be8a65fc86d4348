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

#include "mdr/random.hpp"

#include <cmath>
#include <numbers>

namespace mdr {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    spare_ = mag * std::sin(ang);
    has_spare_ = true;
    return mag * std::cos(ang);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(bound)) %
           bound;
}

namespace {

ComplexMatrix gaussian_matrix(std::size_t dim, Rng& rng) {
    ComplexMatrix g(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            g(r, c) = Complex(rng.normal(), rng.normal());
        }
    }
    return g;
}

}  // namespace

ComplexMatrix haar_unitary(std::size_t dim, Rng& rng) {
    ComplexMatrix g = gaussian_matrix(dim, rng);
    // Modified Gram-Schmidt over the columns.
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            Complex overlap{};
            for (std::size_t r = 0; r < dim; ++r) {
                overlap += std::conj(g(r, prev)) * g(r, c);
            }
            for (std::size_t r = 0; r < dim; ++r) {
                g(r, c) -= overlap * g(r, prev);
            }
        }
        double norm2 = 0.0;
        for (std::size_t r = 0; r < dim; ++r) norm2 += std::norm(g(r, c));
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t r = 0; r < dim; ++r) g(r, c) *= inv;
    }
    return g;
}

ComplexMatrix random_density(std::size_t dim, Rng& rng) {
    const ComplexMatrix g = gaussian_matrix(dim, rng);
    ComplexMatrix rho = g * g.adjoint();
    return rho.scaled(1.0 / rho.trace());
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
    const ComplexMatrix g = gaussian_matrix(dim, rng);
    return (g + g.adjoint()).scaled(0.5);
}

ComplexMatrix hermitian_with_spectrum(const std::vector<double>& eigenvalues,
                                      Rng& rng) {
    const std::size_t dim = eigenvalues.size();
    const ComplexMatrix v = haar_unitary(dim, rng);
    ComplexMatrix d(dim);
    for (std::size_t i = 0; i < dim; ++i) d(i, i) = eigenvalues[i];
    return v * d * v.adjoint();
}

}  // namespace mdr
