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

#include "mdr/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mdr {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("matrix dimensions differ: " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    ComplexMatrix m(rows.size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != m.dim_) {
            throw DimensionMismatch("ragged row in matrix literal");
        }
        std::size_t c = 0;
        for (Complex v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<Complex>& v) {
    ComplexMatrix m(v.size());
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            m(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    require_same_dim(*this, rhs);
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] + rhs.entries_[i];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    require_same_dim(*this, rhs);
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] - rhs.entries_[i];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    require_same_dim(*this, rhs);
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = (*this)(r, k);
            if (a == Complex{}) continue;
            for (std::size_t c = 0; c < dim_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] * factor;
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& v) const {
    if (v.size() != dim_) {
        throw DimensionMismatch("vector length does not match matrix dim");
    }
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

double ComplexMatrix::max_diff(const ComplexMatrix& other) const {
    require_same_dim(*this, other);
    double m = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    }
    return m;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return max_diff(adjoint()) <= tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
    return (adjoint() * (*this)).max_diff(identity(dim_)) <= tol;
}

bool ComplexMatrix::is_positive_semidefinite(double tol) const {
    if (!is_hermitian(tol)) return false;
    const SpectralDecomposition sd = eig_hermitian(*this);
    for (const SpectralBranch& b : sd.branches) {
        if (b.value < -tol) return false;
    }
    return true;
}

bool ComplexMatrix::is_projector(double tol) const {
    return is_hermitian(tol) && ((*this) * (*this)).max_diff(*this) <= tol;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t ra = 0; ra < da; ++ra) {
        for (std::size_t ca = 0; ca < da; ++ca) {
            const Complex f = a(ra, ca);
            if (f == Complex{}) continue;
            for (std::size_t rb = 0; rb < db; ++rb) {
                for (std::size_t cb = 0; cb < db; ++cb) {
                    out(ra * db + rb, ca * db + cb) = f * b(rb, cb);
                }
            }
        }
    }
    return out;
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    ComplexMatrix acc(source_dim);
    for (const SpectralBranch& b : branches) {
        acc = acc + b.projector.scaled(b.value);
    }
    return acc;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double acc = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (r != c) acc += std::norm(a(r, c));
        }
    }
    return std::sqrt(acc);
}

}  // namespace

SpectralDecomposition eig_hermitian(const ComplexMatrix& h, double group_tol) {
    constexpr int kMaxSweeps = 100;
    constexpr double kOffNormTarget = 1e-12;

    if (!h.is_hermitian(kDefaultTol)) {
        throw NotHermitian("eig_hermitian requires a Hermitian input");
    }
    const std::size_t n = h.dim();

    // Work on an exactly Hermitian copy so roundoff in the input cannot
    // leak into complex eigenvalues.
    ComplexMatrix a(n);
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = Complex(h(r, r).real(), 0.0);
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex v = 0.5 * (h(r, c) + std::conj(h(c, r)));
            a(r, c) = v;
            a(c, r) = std::conj(v);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    bool converged = (off_diagonal_norm(a) < kOffNormTarget);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                const double absg = std::abs(g);
                if (absg == 0.0) continue;

                // Unitary 2x2 rotation that annihilates a(p,q): a diagonal
                // phase making the pivot real followed by a Givens rotation.
                const Complex phase = std::conj(g) / absg;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * absg);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Column update: A <- A J, with J_pp=c, J_pq=s,
                // J_qp=-phase*s, J_qq=phase*c.
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - phase * s * aiq;
                    a(i, q) = s * aip + phase * c * aiq;
                }
                // Row update: A <- J^dagger A.
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - std::conj(phase) * s * aqj;
                    a(q, j) = s * apj + std::conj(phase) * c * aqj;
                }
                // Accumulate eigenvectors: V <- V J.
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - phase * s * viq;
                    v(i, q) = s * vip + phase * c * viq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
        converged = (off_diagonal_norm(a) < kOffNormTarget);
    }
    if (!converged) {
        throw NoConvergence("Jacobi sweeps exhausted without convergence");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    SpectralDecomposition sd;
    sd.source_dim = n;
    std::size_t k = 0;
    while (k < n) {
        // Merge eigenvalues with pairwise gap below group_tol into one branch.
        std::size_t end = k + 1;
        while (end < n && a(order[end], order[end]).real() -
                              a(order[end - 1], order[end - 1]).real() <
                          group_tol) {
            ++end;
        }
        double value = 0.0;
        ComplexMatrix proj(n);
        for (std::size_t m = k; m < end; ++m) {
            const std::size_t col = order[m];
            value += a(col, col).real();
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    proj(r, c) += v(r, col) * std::conj(v(c, col));
                }
            }
        }
        sd.branches.push_back({value / static_cast<double>(end - k), proj});
        k = end;
    }
    return sd;
}

double expectation(const ComplexMatrix& op, const ComplexMatrix& rho) {
    require_same_dim(op, rho);
    const Complex t = (op * rho).trace();
    if (std::abs(t.imag()) > 1e-9) {
        throw ImaginaryResidual("trace has imaginary residual " +
                                std::to_string(t.imag()));
    }
    return t.real();
}

}  // namespace mdr
