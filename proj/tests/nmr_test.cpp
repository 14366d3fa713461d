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

#include <algorithm>
#include <numbers>

#include "mga/matrix_oracle.hpp"
#include "mga/nmr.hpp"
#include "support/test_support.hpp"

using namespace mga;
using mga::testing::dense_kron;
using mga::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> sorted_real_eigenvalues(const Element& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_kron(h));
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(zeeman, examples) {
    EXPECT_TRUE(zeeman(SpinSystem({0.0, 0.0})).is_zero());
    EXPECT_EQ(zeeman(SpinSystem({2.0, 0.0})), sigma(3, 1, 2));
    Element k = zeeman(SpinSystem({3.0, 5.0}));
    auto ev = sorted_real_eigenvalues(k);
    EXPECT_NEAR(ev[0], -4.0, 1e-12);
    EXPECT_NEAR(ev[1], -1.0, 1e-12);
    EXPECT_NEAR(ev[2], 1.0, 1e-12);
    EXPECT_NEAR(ev[3], 4.0, 1e-12);
    EXPECT_EQ(max_off_diagonal(to_matrix(k)), 0.0);
}

TEST(spin_system, validation) {
    EXPECT_THROW(SpinSystem({std::nan("")}), std::invalid_argument);
    SpinSystem s({1.0, 2.0, 3.0});
    s.set_coupling(3, 1, 4.0);
    EXPECT_EQ(s.coupling(1, 3), 4.0);
    EXPECT_EQ(s.coupling(1, 2), 0.0);
    EXPECT_THROW(s.coupling(1, 1), std::invalid_argument);
    EXPECT_THROW(s.set_coupling(1, 4, 1.0), std::out_of_range);
}

TEST(full_hamiltonian, forms_agree) {
    SpinSystem s = SpinSystem::two_spin(10, 7, 2);
    Element h = full_hamiltonian(s, 1, 2);
    EXPECT_LT(max_abs_difference(h, full_hamiltonian_correlated(s, 1, 2)), 1e-12);
    EXPECT_EQ(reverse(h), h);
    EXPECT_EQ(full_hamiltonian(SpinSystem::two_spin(10, 7, 0), 1, 2), zeeman(SpinSystem({10, 7})));
}

TEST(weak_hamiltonian, differs_by_flip_flop_terms) {
    SpinSystem s = SpinSystem::two_spin(10, 7, 2);
    const int n = 2;
    Element diff = full_hamiltonian(s, 1, 2) - weak_hamiltonian(s, 1, 2);
    Element ff = (kPi * 2 / 2) * (sigma(1, 1, n) * sigma(1, 2, n) + sigma(2, 1, n) * sigma(2, 2, n));
    EXPECT_LT(max_abs_difference(diff, ff), 1e-12);
    EXPECT_EQ(max_off_diagonal(to_matrix(weak_hamiltonian(s, 1, 2))), 0.0);
    EXPECT_EQ(weak_hamiltonian(SpinSystem::two_spin(3, 1, 0), 1, 2), zeeman(SpinSystem({3, 1})));
}

TEST(full_hamiltonian, commuting_parts) {
    SpinSystem s = SpinSystem::two_spin(10, 7, 2);
    const int n = 2;
    Element h = full_hamiltonian(s, 1, 2);
    Element hp = h * correlated_idempotent(Sign::Plus, 1, 2, n);
    Element hm = h * correlated_idempotent(Sign::Minus, 1, 2, n);
    EXPECT_LT(max_abs_difference(hp * hm, hm * hp), 1e-12);
    EXPECT_LT(max_off_diagonal(to_matrix(hp)), 1e-15);
}

TEST(diagonalize, zero_coupling) {
    auto r = diagonalize_two_spin(SpinSystem::two_spin(10, 7, 0), 1, 2);
    EXPECT_EQ(r.T, Element::identity(2));
    EXPECT_DOUBLE_EQ(r.theta, 1.5);
    EXPECT_EQ(r.phi, 0.0);
    EXPECT_LT(max_abs_difference(r.h_diag, weak_hamiltonian(SpinSystem::two_spin(10, 7, 0), 1, 2)), 1e-15);
}

TEST(diagonalize, degenerate) {
    auto r = diagonalize_two_spin(SpinSystem::two_spin(4, 4, 0), 1, 2);
    EXPECT_EQ(r.T, Element::identity(2));
    EXPECT_EQ(r.theta, 0.0);
    EXPECT_EQ(r.phi, 0.0);
}

TEST(diagonalize, quarter_turn) {
    // nu_- = (w1 - w2) / 2 = pi J gives phi = pi / 4.
    const double j = 1.0;
    auto r = diagonalize_two_spin(SpinSystem::two_spin(2 * kPi * j + 1.0, 1.0, j), 1, 2);
    EXPECT_NEAR(r.phi, kPi / 4, 1e-12);
    EXPECT_NEAR(r.theta, kPi * j * std::sqrt(2.0), 1e-12);
}

TEST(diagonalize, quadrants) {
    auto below = diagonalize_two_spin(SpinSystem::two_spin(1, 5, 1), 1, 2);
    EXPECT_GT(below.phi, kPi / 2);
    auto equal = diagonalize_two_spin(SpinSystem::two_spin(5, 5, 1), 1, 2);
    EXPECT_NEAR(equal.phi, kPi / 2, 1e-15);
}

TEST(diagonalize_properties, conjugation_is_diagonal_and_spectrum_preserved) {
    Gen g(51);
    for (int trial = 0; trial < 100; ++trial) {
        SpinSystem s = SpinSystem::two_spin(g.uniform(-50, 50), g.uniform(-50, 50), g.uniform(-5, 5));
        Element h = full_hamiltonian(s, 1, 2);
        auto r = diagonalize_two_spin(s, 1, 2);
        Element conj = reverse(r.T) * h * r.T;
        ASSERT_LT(max_abs_difference(reverse(r.T) * r.T, Element::identity(2)), 1e-10);
        ASSERT_LT(max_off_diagonal(to_matrix(conj)), 1e-10);
        ASSERT_LT(max_abs_difference(conj, r.h_diag), 1e-10);
        for (const auto& t : r.h_diag.terms()) {
            for (int p = 1; p <= 2; ++p) {
                ASSERT_TRUE(t.string.letter(p) == Letter::I || t.string.letter(p) == Letter::Z);
            }
        }
        auto a = sorted_real_eigenvalues(h), b = sorted_real_eigenvalues(r.h_diag);
        for (std::size_t k = 0; k < a.size(); ++k) ASSERT_NEAR(a[k], b[k], 1e-9);
    }
}

TEST(diagonalize, embedded_pair_in_three_spins) {
    SpinSystem s({10, 3, 7});
    s.set_coupling(1, 3, 2.0);
    auto r = diagonalize_two_spin(s, 1, 3);
    Element conj = reverse(r.T) * full_hamiltonian(s, 1, 3) * r.T;
    EXPECT_LT(max_off_diagonal(to_matrix(conj)), 1e-10);
    EXPECT_LT(max_abs_difference(conj, r.h_diag), 1e-10);
}

TEST(transition_intensities, weak_limit_lines_equal) {
    auto t = transition_intensities(diagonalize_two_spin(SpinSystem::two_spin(10, 7, 0), 1, 2));
    for (const auto& l : t.lines) EXPECT_NEAR(l.intensity, t.lines[0].intensity, 1e-12);
    EXPECT_GT(t.lines[0].intensity, 0.0);
}

TEST(transition_intensities, quarter_turn_ratio) {
    const double j = 1.0;
    auto r = diagonalize_two_spin(SpinSystem::two_spin(2 * kPi * j + 1.0, 1.0, j), 1, 2);
    auto t = transition_intensities(r);
    double ratio = (1 + std::sqrt(0.5)) / (1 - std::sqrt(0.5));
    EXPECT_NEAR(t.lines[0].intensity / t.lines[1].intensity, ratio, 1e-10);
    EXPECT_NEAR(t.lines[3].intensity / t.lines[2].intensity, ratio, 1e-10);
}

TEST(transition_intensities, selection_rule_and_pattern) {
    auto r = diagonalize_two_spin(SpinSystem::two_spin(10, 7, 2), 1, 2);
    for (ScalarPartMode mode : {ScalarPartMode::Real, ScalarPartMode::Complex}) {
        auto t = transition_intensities(r, mode);
        ASSERT_EQ(t.moments.size(), 16u);
        const double s = std::sin(r.phi);
        for (const auto& m : t.moments) {
            bool f1 = m.e1 != m.e1_prime, f2 = m.e2 != m.e2_prime;
            double expected = 0.0;
            if (!f1 && f2) expected = 0.25 * (1 + to_int(m.e1) * s);
            if (f1 && !f2) expected = 0.25 * (1 - to_int(m.e2) * s);
            EXPECT_NEAR(m.value.real(), expected, 1e-12);
            EXPECT_NEAR(m.value.imag(), 0.0, 1e-12);
        }
    }
}

TEST(transition_intensities_properties, total_is_constant) {
    Gen g(52);
    double total0 = -1.0;
    for (int trial = 0; trial < 50; ++trial) {
        auto r = diagonalize_two_spin(SpinSystem::two_spin(g.uniform(-20, 20), g.uniform(-20, 20), g.uniform(-3, 3)), 1, 2);
        double total = 0.0;
        for (const auto& l : transition_intensities(r).lines) total += l.intensity;
        if (total0 < 0) total0 = total;
        ASSERT_NEAR(total, total0, 1e-10);
    }
}
