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

#include "mga/element.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mga {

namespace {

// Multiplies by i^k exactly (no rounding from a complex multiply).
Complex times_i_power(Complex c, unsigned k) {
    switch (k & 3u) {
        case 0: return c;
        case 1: return {-c.imag(), c.real()};
        case 2: return -c;
        default: return {c.imag(), -c.real()};
    }
}

bool negligible(Complex c) { return std::abs(c.real()) + std::abs(c.imag()) < kZeroThreshold; }

}  // namespace

Element::Element(int n) : n_(n) { check_particle_count(n); }

Element::Element(int n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
    check_particle_count(n);
    for (const auto& t : terms_) {
        if (t.string.n_particles() != n) {
            throw std::invalid_argument("term " + t.string.str() + " does not have " +
                                        std::to_string(n) + " particles");
        }
    }
    canonicalize();
}

Element Element::scalar(int n, Complex c) { return Element(n, {Term{PauliString(n), c}}); }

Element Element::blade(const PauliString& p, Complex c) {
    return Element(p.n_particles(), {Term{p, c}});
}

void Element::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.string < b.string; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag())) {
            throw std::domain_error("non-finite coefficient on " + t.string.str());
        }
        if (!merged.empty() && merged.back().string == t.string) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const Term& t) { return negligible(t.coeff); });
    terms_ = std::move(merged);
}

Complex Element::coefficient(const PauliString& p) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const Term& t, const PauliString& s) { return t.string < s; });
    if (it != terms_.end() && it->string == p) return it->coeff;
    return 0.0;
}

bool Element::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().string.is_identity());
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Element& Element::operator+=(const Element& other) {
    check_same_particles(*this, other);
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    canonicalize();
    return *this;
}

Element& Element::operator-=(const Element& other) { return *this += -other; }

Element& Element::operator*=(Complex c) {
    for (auto& t : terms_) t.coeff *= c;
    canonicalize();
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    check_same_particles(a, b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            auto [s, phase] = multiply(ta.string, tb.string);
            out.push_back({s, times_i_power(ta.coeff * tb.coeff, phase)});
        }
    }
    return Element(a.n_, std::move(out));
}

void check_same_particles(const Element& a, const Element& b) {
    if (a.n_particles() != b.n_particles()) {
        throw std::invalid_argument("particle-count mismatch: " + std::to_string(a.n_particles()) +
                                    " vs " + std::to_string(b.n_particles()));
    }
}

Element sigma(int axis, int particle, int n) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
    check_particle_count(n);
    check_particle(particle, n);
    return Element::blade(PauliString(n).with_letter(particle, static_cast<Letter>(axis)));
}

Element iota(int n) { return Element::scalar(n, Complex(0.0, 1.0)); }

Element geometric_product(const Element& a, const Element& b) { return a * b; }

Element linear_combine(std::span<const std::pair<Complex, Element>> pairs) {
    if (pairs.empty()) throw std::invalid_argument("linear_combine needs at least one Element");
    int n = pairs.front().second.n_particles();
    std::vector<Term> out;
    for (const auto& [w, e] : pairs) {
        if (e.n_particles() != n) throw std::invalid_argument("particle-count mismatch in linear_combine");
        for (const auto& t : e.terms()) out.push_back({t.string, w * t.coeff});
    }
    return Element(n, std::move(out));
}

Element reverse(const Element& a) {
    std::vector<Term> out(a.terms().begin(), a.terms().end());
    for (auto& t : out) t.coeff = std::conj(t.coeff);
    return Element(a.n_particles(), std::move(out));
}

Element grade_involution(const Element& a) {
    std::vector<Term> out(a.terms().begin(), a.terms().end());
    for (auto& t : out) {
        t.coeff = std::conj(t.coeff);
        if (t.string.weight() % 2 == 1) t.coeff = -t.coeff;
    }
    return Element(a.n_particles(), std::move(out));
}

Element even_projection(const Element& a) { return 0.5 * (a + grade_involution(a)); }

Complex scalar_part(const Element& a) { return a.coefficient(PauliString(a.n_particles())); }

Element idempotent_e(Sign sign, int particle, int n) {
    return 0.5 * (Element::identity(n) + static_cast<double>(to_int(sign)) * sigma(3, particle, n));
}

Element idempotent_product(std::span<const std::pair<int, Sign>> factors, int n) {
    Element out = Element::identity(n);
    for (const auto& [p, s] : factors) out = out * idempotent_e(s, p, n);
    return out;
}

namespace {

void check_pair(int p1, int p2, int n) {
    check_particle(p1, n);
    check_particle(p2, n);
    if (p1 == p2) throw std::invalid_argument("particle indices must differ");
}

}  // namespace

Element correlated_idempotent(Sign sign, int p1, int p2, int n) {
    check_pair(p1, p2, n);
    return 0.5 * (Element::identity(n) +
                  static_cast<double>(to_int(sign)) * (sigma(3, p1, n) * sigma(3, p2, n)));
}

Element particle_interchange(int p1, int p2, int n) {
    check_pair(p1, p2, n);
    Element out = Element::identity(n);
    for (int axis = 1; axis <= 3; ++axis) out += sigma(axis, p1, n) * sigma(axis, p2, n);
    return 0.5 * out;
}

double max_abs_difference(const Element& a, const Element& b) {
    check_same_particles(a, b);
    double worst = 0.0;
    // Both term lists are sorted; walk them together.
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->string < ib->string)) {
            worst = std::max(worst, std::abs(ia->coeff));
            ++ia;
        } else if (ia == a.terms().end() || ib->string < ia->string) {
            worst = std::max(worst, std::abs(ib->coeff));
            ++ib;
        } else {
            worst = std::max(worst, std::abs(ia->coeff - ib->coeff));
            ++ia;
            ++ib;
        }
    }
    return worst;
}

double max_abs_coefficient(const Element& a) {
    double worst = 0.0;
    for (const auto& t : a.terms()) worst = std::max(worst, std::abs(t.coeff));
    return worst;
}

double l1_norm(const Element& a) {
    double sum = 0.0;
    for (const auto& t : a.terms()) sum += std::abs(t.coeff);
    return sum;
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

}  // namespace mga
