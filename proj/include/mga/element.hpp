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

#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "mga/pauli_string.hpp"

namespace mga {

/// A coefficient of the correlated ideal. The imaginary part is the
/// coefficient of the unit pseudoscalar iota = sigma_1 sigma_2 sigma_3, which
/// the correlator makes common to all particles.
using Complex = std::complex<double>;

/// Terms with |re| + |im| below this are dropped on canonicalization.
inline constexpr double kZeroThreshold = 1e-14;

enum class Sign : int { Plus = 1, Minus = -1 };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator*(Sign a, Sign b) { return to_int(a) * to_int(b) > 0 ? Sign::Plus : Sign::Minus; }

struct Term {
    PauliString string;
    Complex coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// A multivector of the correlated ideal of the N-particle geometric algebra:
/// a complex-weighted sum of Pauli strings. Terms are kept sorted by string
/// with no near-zero coefficients, so two canonical Elements are equal
/// exactly when their term lists are.
class Element {
   public:
    /// The zero Element on `n` particles.
    explicit Element(int n);

    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    Element(int n, std::vector<Term> terms);

    static Element scalar(int n, Complex c);
    static Element identity(int n) { return scalar(n, 1.0); }
    static Element blade(const PauliString& p, Complex c = 1.0);

    int n_particles() const { return n_; }
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Complex coefficient(const PauliString& p) const;

    /// True when the only possible term is the identity string.
    bool is_scalar() const;

    Element operator-() const;
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(Complex c);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, Complex c) { return a *= c; }
    friend Element operator*(Complex c, Element a) { return a *= c; }
    friend Element operator*(const Element& a, const Element& b);

    friend bool operator==(const Element&, const Element&) = default;

   private:
    void canonicalize();

    int n_;
    std::vector<Term> terms_;
};

void check_same_particles(const Element& a, const Element& b);

/// sigma_axis on the given particle (axis 1, 2 or 3 for X, Y, Z).
Element sigma(int axis, int particle, int n);

/// The unit pseudoscalar iota, i.e. the imaginary unit.
Element iota(int n);

Element geometric_product(const Element& a, const Element& b);

/// Termwise weighted sum of Elements that share a particle count.
Element linear_combine(std::span<const std::pair<Complex, Element>> pairs);

/// Reverse: conjugates each coefficient. Hermitian conjugation in the matrix
/// representation; an anti-automorphism.
Element reverse(const Element& a);

/// Grade involution: c P -> (-1)^weight(P) conj(c) P (iota is odd).
Element grade_involution(const Element& a);

/// <a>_+ = (a + hat(a)) / 2.
Element even_projection(const Element& a);

/// Identity-string coefficient: real part is the scalar part, imaginary part
/// the pseudoscalar part. Equals trace(rep(a)) / 2^N.
Complex scalar_part(const Element& a);

/// E_sign^particle = (1 + sign sigma_3^particle) / 2.
Element idempotent_e(Sign sign, int particle, int n);

/// Product of one idempotent per listed particle.
Element idempotent_product(std::span<const std::pair<int, Sign>> factors, int n);

/// E_sign^{p1,p2} = (1 + sign sigma_3^p1 sigma_3^p2) / 2.
Element correlated_idempotent(Sign sign, int p1, int p2, int n);

/// Pi^{p1,p2} = (1 + sum_i sigma_i^p1 sigma_i^p2) / 2. Conjugation swaps the
/// two particle labels.
Element particle_interchange(int p1, int p2, int n);

/// Largest |coefficient difference| over the union of both term sets.
double max_abs_difference(const Element& a, const Element& b);

/// Largest |coefficient| of `a` (0 for the zero Element).
double max_abs_coefficient(const Element& a);

/// Sum of |coefficient|; an upper bound on the operator norm.
double l1_norm(const Element& a);

/// a b - b a.
Element commutator(const Element& a, const Element& b);

}  // namespace mga
