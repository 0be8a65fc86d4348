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

#include <doctest.h>

#include <cmath>

#include "mdr/qmath.hpp"
#include "mdr/qmodel.hpp"
#include "mdr/random.hpp"

using namespace mdr;

TEST_CASE("tensor of identities is the larger identity") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(tensor(i2, i2).max_diff(ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("tensor(Z, I) is diag(1,1,-1,-1)") {
    const ComplexMatrix zi = tensor(gates::pauli_z(), gates::identity2());
    const ComplexMatrix expected = ComplexMatrix::from_rows({{1, 0, 0, 0},
                                                             {0, 1, 0, 0},
                                                             {0, 0, -1, 0},
                                                             {0, 0, 0, -1}});
    CHECK(zi.max_diff(expected) == 0.0);
}

TEST_CASE("tensor(X, X) flips both qubits") {
    const ComplexMatrix xx = tensor(gates::pauli_x(), gates::pauli_x());
    const std::vector<Complex> ket00 = {1, 0, 0, 0};
    const std::vector<Complex> ket11 = xx.apply(ket00);
    CHECK(ket11[3] == Complex(1.0, 0.0));
    CHECK(ket11[0] == Complex(0.0, 0.0));
    CHECK(ket11[1] == Complex(0.0, 0.0));
    CHECK(ket11[2] == Complex(0.0, 0.0));
}

TEST_CASE("tensor mixed-product property") {
    Rng rng(7);
    for (int k = 0; k < 10; ++k) {
        const ComplexMatrix a = random_hermitian(3, rng);
        const ComplexMatrix b = random_hermitian(3, rng);
        const ComplexMatrix eye = ComplexMatrix::identity(2);
        const ComplexMatrix lhs = tensor(a, eye) * tensor(b, eye);
        const ComplexMatrix rhs = tensor(a * b, eye);
        CHECK(lhs.max_diff(rhs) < 1e-12);
    }
}

TEST_CASE("eig_hermitian of Pauli Z") {
    const SpectralDecomposition sd = eig_hermitian(gates::pauli_z());
    REQUIRE(sd.branches.size() == 2);
    CHECK(sd.branches[0].value == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sd.branches[1].value == doctest::Approx(1.0).epsilon(1e-12));
    const ComplexMatrix p1 = ComplexMatrix::from_rows({{0, 0}, {0, 1}});
    const ComplexMatrix p0 = ComplexMatrix::from_rows({{1, 0}, {0, 0}});
    CHECK(sd.branches[0].projector.max_diff(p1) < 1e-12);
    CHECK(sd.branches[1].projector.max_diff(p0) < 1e-12);
}

TEST_CASE("eig_hermitian merges the fully degenerate identity") {
    const SpectralDecomposition sd = eig_hermitian(gates::identity2());
    REQUIRE(sd.branches.size() == 1);
    CHECK(sd.branches[0].value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sd.branches[0].projector.max_diff(ComplexMatrix::identity(2)) <
          1e-12);
}

TEST_CASE("eig_hermitian of Pauli X") {
    const SpectralDecomposition sd = eig_hermitian(gates::pauli_x());
    REQUIRE(sd.branches.size() == 2);
    const ComplexMatrix minus =
        (ComplexMatrix::identity(2) - gates::pauli_x()).scaled(0.5);
    const ComplexMatrix plus =
        (ComplexMatrix::identity(2) + gates::pauli_x()).scaled(0.5);
    CHECK(sd.branches[0].value == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sd.branches[0].projector.max_diff(minus) < 1e-12);
    CHECK(sd.branches[1].projector.max_diff(plus) < 1e-12);
}

TEST_CASE("eig_hermitian rejects a non-Hermitian input") {
    ComplexMatrix m(2);
    m(0, 1) = Complex(1.0, 0.0);
    CHECK_THROWS_AS(eig_hermitian(m), NotHermitian);
}

TEST_CASE("spectral invariants on random Hermitian matrices") {
    Rng rng(42);
    for (int k = 0; k < 100; ++k) {
        const std::size_t dim = 2 + rng.below(7);
        const ComplexMatrix h = random_hermitian(dim, rng);
        const SpectralDecomposition sd = eig_hermitian(h);

        CHECK(sd.reconstruct().max_diff(h) < 1e-10);

        ComplexMatrix sum(dim);
        for (std::size_t i = 0; i < sd.branches.size(); ++i) {
            const ComplexMatrix& pi = sd.branches[i].projector;
            CHECK(pi.is_projector(1e-9));
            sum = sum + pi;
            for (std::size_t j = i + 1; j < sd.branches.size(); ++j) {
                CHECK(sd.branches[i].value < sd.branches[j].value);
                CHECK((pi * sd.branches[j].projector).max_abs() < 1e-9);
            }
        }
        CHECK(sum.max_diff(ComplexMatrix::identity(dim)) < 1e-9);
    }
}

TEST_CASE("trace cyclicity on random triples") {
    Rng rng(99);
    for (int k = 0; k < 20; ++k) {
        const ComplexMatrix a = random_hermitian(4, rng);
        const ComplexMatrix b = random_hermitian(4, rng);
        const ComplexMatrix c = random_hermitian(4, rng);
        const Complex t1 = (a * b * c).trace();
        const Complex t2 = (b * c * a).trace();
        CHECK(std::abs(t1 - t2) < 1e-12);
    }
}

TEST_CASE("expectation on eigenstates") {
    const ComplexMatrix rho0 = ComplexMatrix::from_rows({{1, 0}, {0, 0}});
    CHECK(expectation(gates::pauli_z(), rho0) ==
          doctest::Approx(1.0).epsilon(1e-12));

    const DensityState plus_i = states::y_plus();
    CHECK(expectation(gates::pauli_x(), plus_i.matrix) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(expectation(gates::pauli_y(), plus_i.matrix) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("expectation flags dimension and imaginary-residual bugs") {
    CHECK_THROWS_AS(
        expectation(gates::pauli_z(), ComplexMatrix::identity(4)),
        DimensionMismatch);

    // Non-Hermitian operand leaves an imaginary trace behind.
    ComplexMatrix skew(2);
    skew(0, 1) = Complex(0.0, 1.0);
    const ComplexMatrix rho = ComplexMatrix::from_rows(
        {{0.5, Complex(0.25, 0.25)}, {Complex(0.25, -0.25), 0.5}});
    CHECK_THROWS_AS(expectation(skew, rho), ImaginaryResidual);
}

TEST_CASE("matrix predicates") {
    CHECK(gates::hadamard().is_unitary(1e-12));
    CHECK(gates::pauli_y().is_hermitian(0.0));
    CHECK_FALSE(gates::pauli_z().is_positive_semidefinite(1e-9));
    const ComplexMatrix p = ComplexMatrix::from_rows({{1, 0}, {0, 0}});
    CHECK(p.is_projector(0.0));
    CHECK(p.is_positive_semidefinite(1e-9));
    CHECK_FALSE(gates::hadamard().is_projector(1e-9));
}
