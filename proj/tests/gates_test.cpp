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

#include "mga/gates.hpp"
#include "mga/matrix_oracle.hpp"
#include "mga/propagators.hpp"
#include "mga/states.hpp"
#include "support/test_support.hpp"

using namespace mga;
using mga::testing::dense_kron;
using mga::testing::max_entry;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

SignTuple tuple_of(unsigned bits, int n) {
    SignTuple eps(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) eps[static_cast<std::size_t>(p)] = ((bits >> (n - 1 - p)) & 1u) ? Sign::Minus : Sign::Plus;
    return eps;
}

// Checks u E_eps reverse(u) = E_{f(eps)} for every basis product.
template <class F>
void expect_basis_permutation(const Element& u, int n, F&& f) {
    for (unsigned b = 0; b < (1u << n); ++b) {
        SignTuple eps = tuple_of(b, n);
        Element image = u * basis_idempotent(eps) * reverse(u);
        EXPECT_LT(max_abs_difference(image, basis_idempotent(f(eps))), 1e-12) << "basis state " << b;
    }
}

Eigen::MatrixXcd hadamard2() {
    Eigen::MatrixXcd h(2, 2);
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}

}  // namespace

TEST(hadamard, rotor_examples) {
    EXPECT_EQ(hadamard_rotor(1, 0.0, 1), Element::identity(1));
    EXPECT_NEAR(fidelity_up_to_phase(to_matrix(hadamard(1, 1)), MatrixRep(1, hadamard2())), 1.0, 1e-12);
    Element w = hadamard(1, 1);
    EXPECT_LT(max_abs_difference(w * w, Element::scalar(1, -1.0)), 1e-15);
    EXPECT_THROW(hadamard(3, 2), std::out_of_range);
}

TEST(hadamard, all_particles) {
    EXPECT_EQ(hadamard_all(1), hadamard(1, 1));
    EXPECT_EQ(hadamard(1, 2) * hadamard(2, 2), hadamard(2, 2) * hadamard(1, 2));
    Eigen::MatrixXcd hh = mga::testing::kron(hadamard2(), hadamard2());
    EXPECT_NEAR(fidelity_up_to_phase(to_matrix(hadamard_all(2)), MatrixRep(2, hh)), 1.0, 1e-10);
}

TEST(hadamard, three_hard_pulses) {
    for (int n = 1; n <= 4; ++n) {
        PulseSequence seq = hadamard_hard_pulses(n);
        EXPECT_EQ(seq.size(), 3u);
        EXPECT_NEAR(fidelity_up_to_phase(compile_sequence(seq), hadamard_all(n)), 1.0, 1e-10);
    }
}

TEST(phase_gate, examples) {
    const int n = 2;
    Element v = phase_gate(1, 2, n);
    Element mm = idempotent_e(Sign::Minus, 1, n) * idempotent_e(Sign::Minus, 2, n);
    EXPECT_LT(max_abs_difference(v * mm * reverse(v), mm), 1e-15);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(4, 4);
    expected(0, 0) = std::exp(Complex(0, -kPi / 2));
    EXPECT_LT(max_entry(dense_kron(v) - expected), 1e-15);
    EXPECT_EQ(commutator(v, sigma(3, 1, n)), Element(n));
    EXPECT_THROW(phase_gate(2, 1, n), std::invalid_argument);
    EXPECT_THROW(phase_gate(1, 1, n), std::invalid_argument);
}

TEST(cnot, bare_basis_map) {
    const int n = 2;
    expect_basis_permutation(cnot(1, 2, n, CnotVariant::Bare), n,
                             [](SignTuple e) { return SignTuple{e[0] * e[1], e[1]}; });
}

TEST(cnot, phase_corrected_is_permutation_matrix) {
    const int n = 2;
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    // Control is particle 2 (low bit): |01> <-> |11>, |00> and |10> fixed.
    expected(0, 0) = expected(2, 2) = 1.0;
    expected(1, 3) = expected(3, 1) = 1.0;
    Element c = cnot(1, 2, n);
    EXPECT_LT(max_entry(dense_kron(c) - expected), 1e-12);
    EXPECT_LT(max_abs_difference(c * c, Element::identity(n)), 1e-10);
    EXPECT_THROW(cnot(1, 1, n), std::invalid_argument);
}

TEST(toffoli, closed_form_and_table) {
    const int n = 3;
    Element t = toffoli(1, 2, 3, n);
    EXPECT_LT(max_abs_difference(t, toffoli_closed_form(1, 2, 3, n)), 1e-12);
    EXPECT_LT(max_abs_difference(t * t, Element::identity(n)), 1e-10);
    EXPECT_EQ(commutator(t, sigma(3, 2, n)).is_zero(), true);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(8, 8);
    expected(3, 3) = expected(7, 7) = 0.0;
    expected(3, 7) = expected(7, 3) = 1.0;
    EXPECT_LT(max_entry(dense_kron(t) - expected), 1e-12);
    EXPECT_THROW(toffoli(1, 2, 2, n), std::invalid_argument);
}

TEST(fredkin, closed_form_and_conjugation) {
    const int n = 3;
    Element f = fredkin(1, 2, 3, n);
    EXPECT_LT(max_abs_difference(f, fredkin_closed_form(1, 2, 3, n)), 1e-12);
    EXPECT_LT(max_abs_difference(f * f, Element::identity(n)), 1e-10);
    auto e = [&](Sign a, Sign b, Sign c) { return basis_idempotent({a, b, c}); };
    EXPECT_LT(max_abs_difference(f * e(Sign::Plus, Sign::Minus, Sign::Plus) * reverse(f),
                                 e(Sign::Minus, Sign::Plus, Sign::Plus)),
              1e-12);
    Element x = sigma(1, 1, n) * sigma(2, 2, n) * idempotent_e(Sign::Minus, 3, n);
    EXPECT_LT(max_abs_difference(f * x * reverse(f), x), 1e-12);
}

TEST(gates, exhaustive_permutations_up_to_three_particles) {
    expect_basis_permutation(toffoli(2, 1, 3, 3), 3, [](SignTuple e) {
        if (e[0] == Sign::Minus && e[2] == Sign::Minus) e[1] = flip(e[1]);
        return e;
    });
    expect_basis_permutation(fredkin(1, 3, 2, 3), 3, [](SignTuple e) {
        if (e[1] == Sign::Plus) std::swap(e[0], e[2]);
        return e;
    });
    expect_basis_permutation(cnot(3, 1, 3), 3, [](SignTuple e) {
        if (e[0] == Sign::Minus) e[2] = flip(e[2]);
        return e;
    });
}

TEST(gates, unitary) {
    EXPECT_TRUE(is_unitary(cnot(2, 1, 3)));
    EXPECT_TRUE(is_unitary(toffoli(3, 1, 2, 4)));
    EXPECT_TRUE(is_unitary(fredkin(1, 4, 2, 4)));
    EXPECT_TRUE(is_unitary(phase_gate(1, 3, 3)));
    EXPECT_TRUE(is_unitary(qft(4)));
}

TEST(cnot_sequence, compiled_equals_two_branch_form) {
    CnotPulseSequence s = cnot_pulse_sequence();
    EXPECT_EQ(s.sequence.size(), 3u);
    EXPECT_LT(max_abs_difference(s.propagator, cnot_sequence_closed_form()), 1e-12);
    EXPECT_THROW(cnot_pulse_sequence(3), std::invalid_argument);
}

TEST(cnot_sequence, corrections_give_cnot) {
    const int n = 2;
    Element seq = cnot_pulse_sequence().propagator;
    Element target = cnot(1, 2, n);
    EXPECT_NEAR(fidelity_up_to_phase(cnot_sequence_left_correction() * seq, target), 1.0, 1e-10);
    Element phase = conditional_exp(Element::scalar(n, Complex(0, kPi / 2)), idempotent_e(Sign::Minus, 2, n));
    EXPECT_LT(max_abs_difference(seq * cnot_sequence_right_correction() * phase, target), 1e-12);
}

TEST(cnot_sequence, opposite_left_phase_is_not_a_cnot) {
    const int n = 2;
    Element seq = cnot_pulse_sequence().propagator;
    Element g = Element::identity(n) + sigma(3, 1, n) - sigma(3, 2, n);
    Element wrong = exp_element(g, Complex(0, -kPi / 4)) * seq;
    Element expected = -sigma(2, 1, n) * idempotent_e(Sign::Minus, 2, n) -
                       kI * sigma(3, 1, n) * idempotent_e(Sign::Plus, 2, n);
    EXPECT_LT(max_abs_difference(wrong, expected), 1e-12);
    EXPECT_NEAR(fidelity_up_to_phase(wrong, cnot(1, 2, n)), 0.0, 1e-12);
}

TEST(qft, single_particle_is_hadamard) { EXPECT_EQ(qft(1), hadamard(1, 1)); }

TEST(qft, forms_agree) {
    for (int n = 1; n <= 5; ++n) {
        EXPECT_LT(max_abs_difference(qft(n, QftForm::Recursive), qft(n, QftForm::Rearranged)), 1e-10) << n;
    }
}

TEST(qft, rearranged_factor_count) {
    for (int n = 1; n <= 4; ++n) {
        QftFactors f = qft_rearranged_factors(n);
        EXPECT_EQ(f.conditional_rotations.size(), static_cast<std::size_t>(n));
        EXPECT_EQ(f.conditional_rotations.back(), Element::identity(n));
        EXPECT_EQ(f.hadamard_block, hadamard_all(n));
    }
}

TEST(qft, flat_modulus) {
    for (int n = 1; n <= 4; ++n) {
        Eigen::MatrixXcd m = dense_kron(qft(n));
        double expected = std::pow(2.0, -n / 2.0);
        EXPECT_LT((m.cwiseAbs().array() - expected).abs().maxCoeff(), 1e-10);
    }
}

TEST(qft, size_limits) {
    EXPECT_THROW(qft(0), std::out_of_range);
    EXPECT_THROW(qft(kMaxQftParticles + 1), std::out_of_range);
}

TEST(bit_reversal, reverses_particle_order) {
    const int n = 4;
    Element r = bit_reversal(n);
    EXPECT_LT(max_abs_difference(r * sigma(1, 1, n) * r, sigma(1, 4, n)), 1e-12);
    EXPECT_LT(max_abs_difference(r * sigma(2, 2, n) * r, sigma(2, 3, n)), 1e-12);
    EXPECT_LT(max_abs_difference(r * r, Element::identity(n)), 1e-12);
}
