// Copyright 2026 The mga Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mga/matrix_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mga {

namespace {

void check_cap(int n) {
    if (n > oracle_cap()) {
        throw std::length_error("matrix oracle limited to " + std::to_string(oracle_cap()) +
                                " particles, got " + std::to_string(n));
    }
}

Eigen::Index dimension(int n) { return Eigen::Index{1} << n; }

// Bit of `index` belonging to `particle` (particle 1 is most significant).
int particle_bit(Eigen::Index index, int particle, int n) {
    return static_cast<int>((index >> (n - particle)) & 1);
}

// Entry (r, c) of the Kronecker product of the letters' 2x2 matrices.
Complex kronecker_entry(const PauliString& p, Eigen::Index r, Eigen::Index c) {
    int n = p.n_particles();
    Complex v = 1.0;
    for (int q = 1; q <= n; ++q) {
        v *= pauli_matrix(p.letter(q))(particle_bit(r, q, n), particle_bit(c, q, n));
    }
    return v;
}

}  // namespace

int oracle_cap() {
    if (const char* env = std::getenv("MGA_ORACLE_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            return static_cast<int>(std::min<long>(v, kMaxParticles));
        }
    }
    return kDefaultOracleCap;
}

MatrixRep::MatrixRep(int n, DenseMatrix entries) : n_(n), entries_(std::move(entries)) {
    check_particle_count(n);
    if (entries_.rows() != dimension(n) || entries_.cols() != dimension(n)) {
        throw std::invalid_argument("matrix dimension does not match 2^" + std::to_string(n));
    }
}

MatrixRep::MatrixRep(int n) : MatrixRep(n, DenseMatrix::Zero(dimension(n), dimension(n))) {}

MatrixRep MatrixRep::identity(int n) {
    return {n, DenseMatrix::Identity(dimension(n), dimension(n))};
}

MatrixRep operator*(const MatrixRep& a, const MatrixRep& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("particle-count mismatch in matrix product");
    return {a.n_, a.entries_ * b.entries_};
}

MatrixRep operator+(const MatrixRep& a, const MatrixRep& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("particle-count mismatch in matrix sum");
    return {a.n_, a.entries_ + b.entries_};
}

MatrixRep operator-(const MatrixRep& a, const MatrixRep& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("particle-count mismatch in matrix difference");
    return {a.n_, a.entries_ - b.entries_};
}

Eigen::Matrix2cd pauli_matrix(Letter l) {
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd m;
    switch (l) {
        case Letter::I: m << 1, 0, 0, 1; break;
        case Letter::X: m << 0, 1, 1, 0; break;
        case Letter::Y: m << 0, -i, i, 0; break;
        case Letter::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

MatrixRep to_matrix(const PauliString& p) {
    int n = p.n_particles();
    check_cap(n);
    DenseMatrix m = DenseMatrix::Zero(dimension(n), dimension(n));
    // Each Pauli matrix has one nonzero per row, so the Kronecker product has
    // exactly one nonzero per row at column row ^ flip_mask.
    auto mask = static_cast<Eigen::Index>(p.flip_mask());
    for (Eigen::Index r = 0; r < dimension(n); ++r) m(r, r ^ mask) = kronecker_entry(p, r, r ^ mask);
    return {n, std::move(m)};
}

MatrixRep to_matrix(const Element& a) {
    int n = a.n_particles();
    check_cap(n);
    DenseMatrix m = DenseMatrix::Zero(dimension(n), dimension(n));
    for (const auto& t : a.terms()) {
        auto mask = static_cast<Eigen::Index>(t.string.flip_mask());
        for (Eigen::Index r = 0; r < dimension(n); ++r) {
            m(r, r ^ mask) += t.coeff * kronecker_entry(t.string, r, r ^ mask);
        }
    }
    return {n, std::move(m)};
}

Element from_matrix(const MatrixRep& m) {
    int n = m.n_particles();
    check_cap(n);
    std::vector<Term> terms;
    const auto dim = dimension(n);
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    for (std::uint64_t code = 0; code < count; ++code) {
        PauliString p(n);
        for (int q = 1; q <= n; ++q) {
            p = p.with_letter(q, static_cast<Letter>((code >> (2 * (n - q))) & 3u));
        }
        // trace(rep(P) m) using the single nonzero per row of rep(P).
        auto mask = static_cast<Eigen::Index>(p.flip_mask());
        Complex tr = 0.0;
        for (Eigen::Index r = 0; r < dim; ++r) tr += kronecker_entry(p, r, r ^ mask) * m(r ^ mask, r);
        terms.push_back({p, tr / static_cast<double>(dim)});
    }
    return Element(n, std::move(terms));
}

Element from_matrix(const DenseMatrix& m) {
    auto dim = m.rows();
    if (m.cols() != dim || dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("matrix dimension " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + " is not a power of two");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    check_cap(n);
    return from_matrix(MatrixRep(n, m));
}

MatrixRep matrix_exp(const MatrixRep& m) {
    const auto& a = m.entries();
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        if (!std::isfinite(a.data()[k].real()) || !std::isfinite(a.data()[k].imag())) {
            throw std::domain_error("matrix_exp of a non-finite matrix");
        }
    }
    // Scale so the induced 1-norm is at most 1/2.
    double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    DenseMatrix scaled = a / std::ldexp(1.0, squarings);
    double theta = norm / std::ldexp(1.0, squarings);

    // Smallest order whose Lagrange remainder bound theta^(K+1)/(K+1)! is
    // below 1e-16 (times e^theta <= 2).
    int order = 1;
    double bound = theta * theta / 2.0;
    while (2.0 * bound > 1e-16 && order < 40) {
        ++order;
        bound *= theta / (order + 1);
    }

    const auto dim = a.rows();
    DenseMatrix sum = DenseMatrix::Identity(dim, dim);
    DenseMatrix term = DenseMatrix::Identity(dim, dim);
    for (int k = 1; k <= order; ++k) {
        term = (term * scaled) / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return {m.n_particles(), std::move(sum)};
}

double max_abs(const MatrixRep& m) {
    return m.entries().size() == 0 ? 0.0 : m.entries().cwiseAbs().maxCoeff();
}

double max_off_diagonal(const MatrixRep& m) {
    double worst = 0.0;
    for (Eigen::Index r = 0; r < m.dim(); ++r) {
        for (Eigen::Index c = 0; c < m.dim(); ++c) {
            if (r != c) worst = std::max(worst, std::abs(m(r, c)));
        }
    }
    return worst;
}

double fidelity_up_to_phase(const MatrixRep& u, const MatrixRep& v) {
    if (u.n_particles() != v.n_particles()) {
        throw std::invalid_argument("particle-count mismatch in fidelity");
    }
    Complex overlap = (u.entries().adjoint() * v.entries()).trace();
    return std::abs(overlap) / static_cast<double>(u.dim());
}

double fidelity_up_to_phase(const Element& u, const Element& v) {
    check_same_particles(u, v);
    return fidelity_up_to_phase(to_matrix(u), to_matrix(v));
}

bool is_unitary(const Element& u, double tol) {
    return max_abs_difference(u * reverse(u), Element::identity(u.n_particles())) < tol;
}

}  // namespace mga
