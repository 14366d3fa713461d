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

// Quantum gates as Elements of the correlated ideal.
//
// Bit convention (shared with the matrix oracle): the idempotent sign + is
// bit 0. The controlled-NOT flips its target when the control is in E_-,
// i.e. when the control bit is 1, which is the usual truth table.

#pragma once

#include <vector>

#include "mga/element.hpp"
#include "mga/pulse_sequence.hpp"

namespace mga {

/// Rotation of particle m by alpha about w^m = (sigma_1^m + sigma_3^m) / sqrt(2).
Element hadamard_rotor(int m, double alpha, int n);

/// W^m = -iota w^m, the one-particle Hadamard transform.
Element hadamard(int m, int n);

/// W_N: the (commutative) product of W^m over all particles.
Element hadamard_all(int n);

/// Three nonselective pulses whose product is W_N up to a global phase.
PulseSequence hadamard_hard_pulses(int n);

/// V^{l,m} = exp(-iota pi 2^{l-m} E_+^l E_+^m), l < m.
Element phase_gate(int l, int m, int n);

enum class CnotVariant { Bare, PhaseCorrected };

/// Bare: the transition propagator at alpha = pi. PhaseCorrected: the bare
/// gate left-multiplied by the conditional phase iota E_-^c + E_+^c, giving
/// the exact 0/1 permutation matrix.
Element cnot(int target, int control, int n, CnotVariant variant = CnotVariant::PhaseCorrected);

/// exp(iota pi (1 - sigma_1^t) E_-^c1 E_-^c2 / 2).
Element toffoli(int target, int c1, int c2, int n);

/// sigma_1^t E_-^c1 E_-^c2 + (1 - E_-^c1 E_-^c2).
Element toffoli_closed_form(int target, int c1, int c2, int n);

/// exp(iota pi (1 - Pi^{p1,p2}) E_+^c / 2): swaps p1 and p2 when the control is +.
Element fredkin(int p1, int p2, int control, int n);

/// Pi^{p1,p2} E_+^c + E_-^c.
Element fredkin_closed_form(int p1, int p2, int control, int n);

/// The three-propagator NMR controlled-NOT (target 1, control 2):
/// S = exp(-iota pi s1^1 / 4) exp(-iota pi s3^1 s3^2 / 4) exp(-iota pi s2^1 / 4).
struct CnotPulseSequence {
    PulseSequence sequence;
    Element propagator;
};

CnotPulseSequence cnot_pulse_sequence(int n = 2);

/// e^{-iota pi s1^1/2} e^{iota pi s3^1/4} E_-^2 + e^{-iota pi s3^1/4} E_+^2.
Element cnot_sequence_closed_form();

/// exp(iota pi (1 + s3^1 - s3^2) / 4), applied on the left of S. With the
/// opposite sign the product is -s2^1 E_-^2 - iota s3^1 E_+^2, not a CNOT.
Element cnot_sequence_left_correction();

/// exp(iota pi s3^1 s3^2 / 4), applied on the right of S together with the
/// conditional phase exp(iota pi E_-^2 / 2).
Element cnot_sequence_right_correction();

enum class QftForm { Recursive, Rearranged };

inline constexpr int kMaxQftParticles = 8;

/// Q_N. Recursive: U^1 ... U^N with U^m = W^m V^{m,m+1} ... V^{m,N}.
/// Rearranged: C^1 ... C^N W_N where C^m = exp(-iota (1 + s1^m) A_m / 2) and
/// A_m = sum_{k>m} omega_{mk} E_+^k, obtained by moving every W^m to the right.
Element qft(int n, QftForm form = QftForm::Recursive);

/// The factors of the rearranged form: one conditional rotation per particle
/// (the last is the identity, A_N being empty) and the Hadamard block.
struct QftFactors {
    std::vector<Element> conditional_rotations;
    Element hadamard_block;
};

QftFactors qft_rearranged_factors(int n);

/// Reverses the particle order: product of interchanges Pi^{k, n+1-k}.
Element bit_reversal(int n);

}  // namespace mga
