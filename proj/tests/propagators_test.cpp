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


#include <gtest/gtest.h>

#include <numbers>

#include "mga/matrix_oracle.hpp"
#include "mga/propagators.hpp"
#include "support/test_support.hpp"

using namespace mga;
using mga::testing::dense_kron;
using mga::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Independent route: matrix exponential of the dense generator.
double exp_vs_oracle(const Element& g, Complex scale) {
    return max_abs(to_matrix(exp_element(g, scale)) - matrix_exp(scale * to_matrix(g)));
}

}  // namespace

TEST(rotor, examples) {
    EXPECT_LT(max_abs_difference(rotor({1, 0, 0}, kPi, 1, 1), -kI * sigma(1, 1, 1)), 1e-15);
    EXPECT_EQ(rotor(AxisVector::normalized(1, 2, 3), 0.0, 1, 2), Element::identity(2));
    Element w = -kI * (sigma(1, 2, 2) + sigma(3, 2, 2)) * (1.0 / std::sqrt(2.0));
    EXPECT_LT(max_abs_difference(rotor(AxisVector::normalized(1, 0, 1), kPi, 2, 2), w), 1e-15);
    EXPECT_THROW(rotor({1, 1, 0}, 1.0, 1, 1), std::invalid_argument);
}

TEST(exp_element, strategies) {
    EXPECT_EQ(exp_strategy(Element::scalar(2, 3.0)), ExpStrategy::Scalar);
    EXPECT_EQ(exp_strategy(sigma(1, 1, 2) * sigma(3, 2, 2)), ExpStrategy::ScalarSquare);
    // (s3^1 - s3^2)^2 = 2 - 2 s3 s3: needs the series.
    EXPECT_EQ(exp_strategy(sigma(3, 1, 2) - sigma(3, 2, 2)), ExpStrategy::Series);
    // (1 - s1)^2 = 2 (1 - s1): quadratic.
    Element e = idempotent_e(Sign::Minus, 2, 3) * idempotent_e(Sign::Minus, 3, 3);
    EXPECT_EQ(exp_strategy((Element::identity(3) - sigma(1, 1, 3)) * e), ExpStrategy::Quadratic);
}

TEST(exp_element, examples) {
    EXPECT_EQ(exp_element(Element(2)), Element::identity(2));
    // exp(iota J t) for the scalar coupling
    const double j = 3.0, t = 0.17;
    Element u = exp_element(scalar_coupling_hamiltonian(j, 1, 2, 2), Complex(0.0, t));
    EXPECT_LT(max_abs_difference(u, scalar_coupling_propagator(j, t, 1, 2, 2)), 1e-12);
    Element expected = std::exp(Complex(0.0, -kPi * j * t / 2)) *
                       (Element::scalar(2, std::cos(kPi * j * t)) +
                        kI * std::sin(kPi * j * t) * particle_interchange(1, 2, 2));
    EXPECT_LT(max_abs_difference(u, expected), 1e-12);
}

TEST(exp_element, every_strategy_matches_oracle) {
    Element e = idempotent_e(Sign::Minus, 2, 3) * idempotent_e(Sign::Minus, 3, 3);
    EXPECT_LT(exp_vs_oracle(Element::scalar(1, 0.3), Complex(0, 1)), 1e-12);
    EXPECT_LT(exp_vs_oracle(sigma(1, 1, 2) * sigma(2, 2, 2), Complex(0, -0.7)), 1e-12);
    EXPECT_LT(exp_vs_oracle((Element::identity(3) - sigma(1, 1, 3)) * e, Complex(0, kPi / 2)), 1e-12);
    EXPECT_LT(exp_vs_oracle(sigma(3, 1, 2) - sigma(3, 2, 2) + Element::identity(2), Complex(0, 0.9)), 1e-12);
    EXPECT_LT(exp_vs_oracle(sigma(1, 1, 2) + sigma(3, 2, 2), Complex(1.3, 0)), 1e-10);
    Element f = sigma(2, 1, 2) * sigma(1, 2, 2);
    Element cm = correlated_idempotent(Sign::Minus, 1, 2, 2);
    Element hinted = exp_element(f * cm, Complex(0, -0.4), IdempotentFactorization{f, cm});
    EXPECT_LT(max_abs(to_matrix(hinted) - matrix_exp(Complex(0, -0.4) * to_matrix(f * cm))), 1e-12);
}

TEST(exp_element_properties, random_anti_hermitian_generators_match_oracle) {
    Gen g(31);
    for (int trial = 0; trial < 100; ++trial) {
        int n = g.uniform_int(1, 3);
        Element h = g.hermitian(n, 5);
        Element u = exp_element(h, Complex(0.0, -1.0));
        ASSERT_LT(max_abs(to_matrix(u) - matrix_exp(Complex(0.0, -1.0) * to_matrix(h))), 1e-9);
        ASSERT_TRUE(is_unitary(u));
    }
}

TEST(conditional_exp, examples) {
    const int n = 2;
    const double alpha = 0.8;
    Element a = (-kI * alpha / 2.0) * sigma(1, 1, n);
    Element em = idempotent_e(Sign::Minus, 2, n), ep = idempotent_e(Sign::Plus, 2, n);
    Element expected = rotor({1, 0, 0}, alpha, 1, n) * em + ep;
    EXPECT_LT(max_abs_difference(conditional_exp(a, em), expected), 1e-15);
    EXPECT_EQ(conditional_exp(a, Element(n)), Element::identity(n));

    Element swap = (kI * kPi / 2.0) * (Element::identity(3) - particle_interchange(1, 2, 3));
    Element e3 = idempotent_e(Sign::Plus, 3, 3);
    Element f = particle_interchange(1, 2, 3) * e3 + idempotent_e(Sign::Minus, 3, 3);
    EXPECT_LT(max_abs_difference(conditional_exp(swap, e3), f), 1e-15);
}

TEST(conditional_exp, rejects_bad_preconditions) {
    const int n = 2;
    EXPECT_THROW(conditional_exp(sigma(1, 1, n), sigma(3, 1, n)), std::invalid_argument);
    EXPECT_THROW(conditional_exp(sigma(1, 1, n), idempotent_e(Sign::Plus, 1, n)), std::invalid_argument);
}

TEST(conditional_exp_properties, inverse_pairs) {
    Gen g(32);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3;
        // Generators on particles 1-2 commute with idempotents of particle 3.
        Element h(n);
        for (int k = 0; k < 3; ++k) {
            PauliString s = g.string(n).with_letter(3, Letter::I);
            h += Element::blade(s, g.uniform(-1, 1));
        }
        Element e = idempotent_e(g.uniform_int(0, 1) ? Sign::Plus : Sign::Minus, 3, n);
        Element a = -kI * h;
        Element prod = conditional_exp(a, e) * conditional_exp(-a, e);
        ASSERT_LT(max_abs_difference(prod, Element::identity(n)), 1e-10);
        ASSERT_TRUE(is_unitary(conditional_exp(a, e)));
    }
}

TEST(transition_propagator, basis_map) {
    const int n = 2;
    Element r = transition_propagator(kPi, 1, 2, n);
    auto e = [&](Sign a, Sign b) { return idempotent_e(a, 1, n) * idempotent_e(b, 2, n); };
    EXPECT_LT(max_abs_difference(r * e(Sign::Plus, Sign::Minus) * reverse(r), e(Sign::Minus, Sign::Minus)), 1e-15);
    EXPECT_LT(max_abs_difference(r * e(Sign::Plus, Sign::Plus) * reverse(r), e(Sign::Plus, Sign::Plus)), 1e-15);
    EXPECT_EQ(transition_propagator(0.0, 1, 2, n), Element::identity(n));
    EXPECT_THROW(transition_propagator(kPi, 2, 2, n), std::invalid_argument);
}

TEST(scalar_coupling, hamiltonian_expansion) {
    const int n = 2;
    EXPECT_TRUE(scalar_coupling_hamiltonian(0.0, 1, 2, n).is_zero());
    const double j = 1.5;
    Element expected = (kPi * j / 2.0) * (sigma(1, 1, n) * sigma(1, 2, n) + sigma(2, 1, n) * sigma(2, 2, n) +
                                          sigma(3, 1, n) * sigma(3, 2, n));
    Element h = scalar_coupling_hamiltonian(j, 1, 2, n);
    EXPECT_LT(max_abs_difference(h, expected), 1e-15);
    EXPECT_EQ(reverse(h), h);
}

TEST(compound_pulse, zero_angles) {
    EXPECT_LT(max_abs_difference(compound_pulse(0, 0, 0, 0), Element::identity(2)), 1e-15);
}

TEST(compound_pulse, interchange_up_to_conditional_phase) {
    const int n = 2;
    const double a = kPi * std::sqrt(2.0);
    Element p = compound_pulse(0, a, 0, a);
    auto s = [&](int i, int m) { return sigma(i, m, n); };
    Element expected = 0.5 * (s(3, 1) + s(3, 2) - s(1, 1) * s(1, 2) - s(2, 1) * s(2, 2));
    EXPECT_LT(max_abs_difference(p, expected), 1e-12);
    Element phase = conditional_exp(Element::scalar(n, Complex(0, kPi)),
                                    idempotent_e(Sign::Plus, 1, n) * idempotent_e(Sign::Plus, 2, n));
    // Equal to the interchange up to a global sign.
    EXPECT_LT(max_abs_difference(p * phase, -particle_interchange(1, 2, n)), 1e-12);
    EXPECT_NEAR(fidelity_up_to_phase(p * phase, particle_interchange(1, 2, n)), 1.0, 1e-12);
}

TEST(compound_pulse, double_quantum_transition) {
    const int n = 2;
    const double a = kPi * std::sqrt(2.0);
    Element p = compound_pulse(a, 0, 0, a);
    auto s = [&](int i, int m) { return sigma(i, m, n); };
    Element expected = 0.5 * (s(3, 1) - s(3, 2) - s(1, 1) * s(1, 2) + s(2, 1) * s(2, 2));
    EXPECT_LT(max_abs_difference(p, expected), 1e-12);
    Element phase = conditional_exp(Element::scalar(n, Complex(0, kPi)),
                                    idempotent_e(Sign::Plus, 1, n) * idempotent_e(Sign::Minus, 2, n));
    Element target = 0.5 * (Element::identity(n) - s(3, 1) * s(3, 2) + s(1, 1) * s(1, 2) - s(2, 1) * s(2, 2));
    EXPECT_LT(max_abs_difference(p * phase, -target), 1e-12);
    Element pp = idempotent_e(Sign::Plus, 1, n) * idempotent_e(Sign::Plus, 2, n);
    Element mm = idempotent_e(Sign::Minus, 1, n) * idempotent_e(Sign::Minus, 2, n);
    EXPECT_LT(max_abs_difference(target * pp * reverse(target), mm), 1e-12);
}

TEST(compound_pulse, double_quantum_operator_identity) {
    const int n = 2;
    Element d = sigma(1, 1, n) * sigma(1, 2, n) - sigma(2, 1, n) * sigma(2, 2, n);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        Element ee = idempotent_e(s, 1, n) * idempotent_e(s, 2, n);
        Element ff = idempotent_e(flip(s), 1, n) * idempotent_e(flip(s), 2, n);
        EXPECT_EQ(d * ee * d, 4.0 * ff);
    }
}

TEST(compound_pulse_properties, split_commutes_and_matches_oracle) {
    Gen g(33);
    for (int trial = 0; trial < 50; ++trial) {
        double ap = g.uniform(-4, 4), am = g.uniform(-4, 4), bp = g.uniform(-4, 4), bm = g.uniform(-4, 4);
        CompoundPulse c = compound_pulse_split(ap, am, bp, bm);
        ASSERT_LT(max_abs_difference(c.exp_x * c.exp_y, c.exp_y * c.exp_x), 1e-10);
        ASSERT_LT(max_abs_difference(c.x * c.x, Element::scalar(2, c.x_squared)), 1e-12);
        ASSERT_NEAR(c.x_squared, ((ap + am) * (ap + am) + (bp - bm) * (bp - bm)) / 16, 1e-12);
        ASSERT_NEAR(c.y_squared, ((ap - am) * (ap - am) + (bp + bm) * (bp + bm)) / 16, 1e-12);
        Element gen = compound_pulse_generator(ap, am, bp, bm);
        ASSERT_LT(max_abs(to_matrix(c.propagator) - matrix_exp(Complex(0, -1) * to_matrix(gen))), 1e-10);
        ASSERT_TRUE(is_unitary(c.propagator));
    }
}

TEST(compound_pulse, requires_two_particles) {
    EXPECT_THROW(compound_pulse(0, 0, 0, 0, 3), std::invalid_argument);
}
