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


// Shared helpers for the unit and acceptance tests.
//
// dense_kron builds matrices by explicit Kronecker products of 2x2 Pauli
// matrices, independently of the library's entrywise to_matrix.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <ostream>
#include <random>
#include <vector>

#include "mga/element.hpp"
#include "mga/format.hpp"

namespace mga {

// Readable gtest failure messages.
inline void PrintTo(const Element& e, std::ostream* os) { *os << format_element(e, FormatMode::Text); }

}  // namespace mga

namespace mga::testing {

inline Eigen::MatrixXcd pauli2(Letter l) {
    const Complex i(0.0, 1.0);
    Eigen::MatrixXcd m(2, 2);
    switch (l) {
        case Letter::I: m << 1, 0, 0, 1; break;
        case Letter::X: m << 0, 1, 1, 0; break;
        case Letter::Y: m << 0, -i, i, 0; break;
        case Letter::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

inline Eigen::MatrixXcd dense_kron(const Element& e) {
    const int n = e.n_particles();
    const Eigen::Index d = Eigen::Index{1} << n;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& t : e.terms()) {
        Eigen::MatrixXcd m = pauli2(t.string.letter(1));
        for (int p = 2; p <= n; ++p) m = kron(m, pauli2(t.string.letter(p)));
        out += t.coeff * m;
    }
    return out;
}

inline double max_entry(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

/// Dense state |bits> with particle 1 the most significant bit, sign + = bit 0.
inline Eigen::MatrixXcd basis_projector(int n, unsigned bits) {
    const Eigen::Index d = Eigen::Index{1} << n;
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
    p(bits, bits) = 1.0;
    return p;
}

/// Hand-rolled generator: a random Element with `terms` distinct-or-not
/// random strings and Gaussian complex coefficients.
class Gen {
   public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    PauliString string(int n) {
        PauliString s(n);
        for (int p = 1; p <= n; ++p) s = s.with_letter(p, static_cast<Letter>(uniform_int(0, 3)));
        return s;
    }

    Element element(int n, int max_terms = 6) {
        std::normal_distribution<double> g;
        std::vector<Term> ts;
        int k = uniform_int(1, max_terms);
        for (int t = 0; t < k; ++t) ts.push_back({string(n), Complex(g(rng_), g(rng_))});
        return Element(n, std::move(ts));
    }

    /// Real coefficients on Pauli strings: reverse-invariant.
    Element hermitian(int n, int max_terms = 6) {
        std::normal_distribution<double> g;
        std::vector<Term> ts;
        int k = uniform_int(1, max_terms);
        for (int t = 0; t < k; ++t) ts.push_back({string(n), Complex(g(rng_), 0.0)});
        return Element(n, std::move(ts));
    }

    std::mt19937_64& rng() { return rng_; }

   private:
    std::mt19937_64 rng_;
};

}  // namespace mga::testing
