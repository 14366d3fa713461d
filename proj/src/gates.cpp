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

#include "mga/gates.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "mga/propagators.hpp"

namespace mga {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

void check_distinct(std::initializer_list<int> indices, int n) {
    std::set<int> seen;
    for (int p : indices) {
        check_particle(p, n);
        if (!seen.insert(p).second) throw std::invalid_argument("gate indices must be distinct");
    }
}

const AxisVector kHadamardAxis = AxisVector::normalized(1.0, 0.0, 1.0);
const AxisVector kAxisX{1.0, 0.0, 0.0};
const AxisVector kAxisY{0.0, 1.0, 0.0};

}  // namespace

Element hadamard_rotor(int m, double alpha, int n) { return rotor(kHadamardAxis, alpha, m, n); }

Element hadamard(int m, int n) { return hadamard_rotor(m, kPi, n); }

Element hadamard_all(int n) {
    check_particle_count(n);
    Element w = Element::identity(n);
    for (int m = 1; m <= n; ++m) w = w * hadamard(m, n);
    return w;
}

PulseSequence hadamard_hard_pulses(int n) {
    // exp(iota pi s2/8) exp(iota pi s1/2) exp(-iota pi s2/8), rightmost first.
    return PulseSequence(n, {
                                HardPulse{kAxisY, kPi / 4},
                                HardPulse{kAxisX, -kPi},
                                HardPulse{kAxisY, -kPi / 4},
                            });
}

Element phase_gate(int l, int m, int n) {
    check_particle(l, n);
    check_particle(m, n);
    if (l >= m) throw std::invalid_argument("phase gate needs l < m");
    double omega = kPi * std::ldexp(1.0, l - m);
    Element e = idempotent_e(Sign::Plus, l, n) * idempotent_e(Sign::Plus, m, n);
    return conditional_exp(Element::scalar(n, Complex(0.0, -omega)), e);
}

Element cnot(int target, int control, int n, CnotVariant variant) {
    Element bare = transition_propagator(kPi, target, control, n);
    if (variant == CnotVariant::Bare) return bare;
    Element phase = kI * idempotent_e(Sign::Minus, control, n) + idempotent_e(Sign::Plus, control, n);
    return phase * bare;
}

Element toffoli(int target, int c1, int c2, int n) {
    check_distinct({target, c1, c2}, n);
    Element cond = idempotent_e(Sign::Minus, c1, n) * idempotent_e(Sign::Minus, c2, n);
    Element gen = (kI * kPi / 2.0) * (Element::identity(n) - sigma(1, target, n));
    return conditional_exp(gen, cond);
}

Element toffoli_closed_form(int target, int c1, int c2, int n) {
    check_distinct({target, c1, c2}, n);
    Element cond = idempotent_e(Sign::Minus, c1, n) * idempotent_e(Sign::Minus, c2, n);
    return sigma(1, target, n) * cond + (Element::identity(n) - cond);
}

Element fredkin(int p1, int p2, int control, int n) {
    check_distinct({p1, p2, control}, n);
    Element gen = (kI * kPi / 2.0) * (Element::identity(n) - particle_interchange(p1, p2, n));
    return conditional_exp(gen, idempotent_e(Sign::Plus, control, n));
}

Element fredkin_closed_form(int p1, int p2, int control, int n) {
    check_distinct({p1, p2, control}, n);
    return particle_interchange(p1, p2, n) * idempotent_e(Sign::Plus, control, n) +
           idempotent_e(Sign::Minus, control, n);
}

CnotPulseSequence cnot_pulse_sequence(int n) {
    if (n != 2) throw std::invalid_argument("the three-propagator controlled-NOT is a two-particle sequence");
    PulseSequence seq(2, {
                             SoftPulse{1, kAxisY, kPi / 2},
                             CouplingEvolution{1, 2, kPi / 2},
                             SoftPulse{1, kAxisX, kPi / 2},
                         });
    Element u = compile_sequence(seq);
    return {std::move(seq), std::move(u)};
}

Element cnot_sequence_closed_form() {
    constexpr int n = 2;
    Element e_minus = idempotent_e(Sign::Minus, 2, n);
    Element e_plus = idempotent_e(Sign::Plus, 2, n);
    Element not1 = kI * (-1.0) * sigma(1, 1, n);  // exp(-iota pi s1^1 / 2)
    Element z_plus = rotor({0, 0, 1}, kPi / 2, 1, n);   // exp(-iota pi s3^1 / 4)
    Element z_minus = rotor({0, 0, 1}, -kPi / 2, 1, n);  // exp(iota pi s3^1 / 4)
    return not1 * z_minus * e_minus + z_plus * e_plus;
}

Element cnot_sequence_left_correction() {
    constexpr int n = 2;
    Element g = Element::identity(n) + sigma(3, 1, n) - sigma(3, 2, n);
    return exp_element(g, Complex(0.0, kPi / 4));
}

Element cnot_sequence_right_correction() {
    constexpr int n = 2;
    return exp_element(sigma(3, 1, n) * sigma(3, 2, n), Complex(0.0, kPi / 4));
}

namespace {

void check_qft_size(int n) {
    if (n < 1 || n > kMaxQftParticles) {
        throw std::out_of_range("QFT particle count must be in 1.." + std::to_string(kMaxQftParticles));
    }
}

double qft_angle(int l, int m) { return kPi * std::ldexp(1.0, l - m); }

}  // namespace

QftFactors qft_rearranged_factors(int n) {
    check_qft_size(n);
    QftFactors out{{}, hadamard_all(n)};
    for (int m = 1; m <= n; ++m) {
        // exp(-iota A_m) as a product of commuting conditional phases.
        Element phases = Element::identity(n);
        for (int k = m + 1; k <= n; ++k) {
            phases = phases * conditional_exp(Element::scalar(n, Complex(0.0, -qft_angle(m, k))),
                                              idempotent_e(Sign::Plus, k, n));
        }
        // W E_+^m W^-1 = (1 + s1^m) / 2 is the idempotent conditioning A_m.
        Element x_plus = 0.5 * (Element::identity(n) + sigma(1, m, n));
        out.conditional_rotations.push_back(conditionalize(phases, x_plus));
    }
    return out;
}

Element qft(int n, QftForm form) {
    check_qft_size(n);
    Element q = Element::identity(n);
    if (form == QftForm::Recursive) {
        for (int m = 1; m <= n; ++m) {
            q = q * hadamard(m, n);
            for (int k = m + 1; k <= n; ++k) q = q * phase_gate(m, k, n);
        }
        return q;
    }
    auto factors = qft_rearranged_factors(n);
    for (const auto& c : factors.conditional_rotations) q = q * c;
    return q * factors.hadamard_block;
}

Element bit_reversal(int n) {
    check_particle_count(n);
    Element r = Element::identity(n);
    for (int k = 1; k < n + 1 - k; ++k) r = r * particle_interchange(k, n + 1 - k, n);
    return r;
}

}  // namespace mga
