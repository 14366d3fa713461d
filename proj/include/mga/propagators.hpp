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

#include <optional>

#include "mga/element.hpp"

namespace mga {

/// Unit rotation axis a = a1 sigma_1 + a2 sigma_2 + a3 sigma_3 of one particle.
struct AxisVector {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    static AxisVector normalized(double x, double y, double z);

    double norm() const;
    /// Throws std::invalid_argument unless |norm - 1| <= 1e-12.
    void check_unit() const;

    friend bool operator==(const AxisVector&, const AxisVector&) = default;
};

/// a^particle as an Element.
Element axis_element(const AxisVector& axis, int particle, int n);

/// exp(-iota angle a^particle / 2) = cos(angle/2) - iota a sin(angle/2).
Element rotor(const AxisVector& axis, double angle, int particle, int n);

/// g = factor * idempotent with the two factors commuting; lets exp_element
/// route through conditional_exp when g itself has no simple closed form.
struct IdempotentFactorization {
    Element factor;
    Element idempotent;
};

enum class ExpStrategy {
    Scalar,         // g is a multiple of the identity
    ScalarSquare,   // non-scalar part squares to a scalar: cos/sin closed form
    Quadratic,      // non-scalar part r obeys r^2 = a + b r: two-eigenvalue closed form
    Factorized,     // caller-supplied idempotent factorization
    Series,         // scaling and squaring on Elements
};

/// How exp_element would evaluate exp(scale * g).
ExpStrategy exp_strategy(const Element& g);

/// exp(scale * g). The identity component is split off first (it commutes
/// with everything); the remainder uses the closed form its minimal
/// polynomial allows, else a scaling-and-squaring Taylor series.
Element exp_element(const Element& g, Complex scale = 1.0,
                    const std::optional<IdempotentFactorization>& hint = std::nullopt);

/// u e + (1 - e): applies u on the range of the idempotent e and the identity
/// elsewhere. Checks that e is idempotent and commutes with u.
Element conditionalize(const Element& u, const Element& e);

/// exp(a e) = exp(a) e + (1 - e) for idempotent e commuting with a.
Element conditional_exp(const Element& a, const Element& e);

/// exp(-iota alpha sigma_1^target E_-^control / 2); alpha = pi gives the bare
/// controlled-NOT.
Element transition_propagator(double alpha, int target, int control, int n);

/// pi J (2 Pi^{p1,p2} - 1) / 2, J in Hz.
Element scalar_coupling_hamiltonian(double j_hz, int p1, int p2, int n);

/// exp(iota J t) = e^{-iota pi J t / 2} (cos(pi J t) + iota Pi sin(pi J t)).
Element scalar_coupling_propagator(double j_hz, double t, int p1, int p2, int n);

/// Two-particle exponential of all four single-flip transitions, regrouped
/// into two commuting generators X and Y.
struct CompoundPulse {
    Element x;
    Element y;
    double x_squared;  // ((a+ + a-)^2 + (b+ - b-)^2) / 16
    double y_squared;  // ((a+ - a-)^2 + (b+ + b-)^2) / 16
    Element exp_x;     // exp(-iota X)
    Element exp_y;     // exp(-iota Y)
    Element propagator;
};

/// G = (a+ s1^1 E+^2 + a- s1^1 E-^2 + b+ s1^2 E+^1 + b- s1^2 E-^1) / 2; the
/// compound pulse is exp(-iota G) and G = X + Y.
Element compound_pulse_generator(double alpha_plus, double alpha_minus, double beta_plus,
                                 double beta_minus);

CompoundPulse compound_pulse_split(double alpha_plus, double alpha_minus, double beta_plus,
                                   double beta_minus);

Element compound_pulse(double alpha_plus, double alpha_minus, double beta_plus,
                       double beta_minus, int n = 2);

}  // namespace mga
