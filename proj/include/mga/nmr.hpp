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


// Two-spin NMR Hamiltonians and their diagonalization by a conditional rotation.
//
// Frequencies omega are in rad/s and enter the Zeeman term as omega/2 s3.
// Couplings J are in Hz and enter as pi J (2 Pi - 1) / 2.

#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "mga/element.hpp"

namespace mga {

class SpinSystem {
   public:
    /// Frequencies for particles 1..omega.size(); no couplings.
    explicit SpinSystem(std::vector<double> omega);

    static SpinSystem two_spin(double omega1, double omega2, double j_hz);

    int n_particles() const { return static_cast<int>(omega_.size()); }
    double omega(int p) const;
    /// J for an unordered pair; zero when unset.
    double coupling(int p1, int p2) const;
    void set_coupling(int p1, int p2, double j_hz);

   private:
    std::vector<double> omega_;
    std::map<std::pair<int, int>, double> j_hz_;
};

/// 1/2 sum_m omega^m s3^m over every particle.
Element zeeman(const SpinSystem& s);

/// 1/2 (omega^p1 s3^p1 + omega^p2 s3^p2).
Element pair_zeeman(const SpinSystem& s, int p1, int p2);

/// Scalar coupling plus pair Zeeman term.
Element full_hamiltonian(const SpinSystem& s, int p1, int p2);

/// The same Hamiltonian assembled as
/// 1/2 w1 s3^1 + 1/2 w2 s3^2 + pi J (1/2 s3 s3 + s1 s1 E_-^{1,2}).
Element full_hamiltonian_correlated(const SpinSystem& s, int p1, int p2);

/// Pair Zeeman term plus 1/2 pi J s3 s3.
Element weak_hamiltonian(const SpinSystem& s, int p1, int p2);

/// T(phi) = exp(-phi iota s2^p1 s1^p2 E_-^{p1,p2} / 2) and the diagonal
/// Hamiltonian reverse(T) H T.
///
/// With nu = omega / 2 (the s3 coefficients of the Zeeman term):
///   theta  = sqrt(nu_-^2 + (pi J)^2),  phi = atan2(pi J, nu_-)
///   h_diag = 1/2 (nu_+ + theta) s3^p1 + 1/2 (nu_+ - theta) s3^p2 + 1/2 pi J s3 s3
/// nu_- = J = 0 gives T = 1, theta = 0, phi = 0.
struct DiagonalizationResult {
    int n_particles;
    int p1;
    int p2;
    Element T;
    double theta;
    double phi;
    Element h_diag;
};

DiagonalizationResult diagonalize_two_spin(const SpinSystem& s, int p1, int p2);

/// Which part of the bracket counts as its value.
enum class ScalarPartMode {
    Real,     // real scalar part only
    Complex,  // scalar plus pseudoscalar, i.e. the complex identity coefficient
};

/// <[E_e1 T~ M T E_e1'] [E_e2 T~ M T E_e2']> with M = s1^p1 + s1^p2.
struct TransitionMoment {
    Sign e1;
    Sign e1_prime;
    Sign e2;
    Sign e2_prime;
    Complex value;
};

/// One spectral line: the flipped particle with the other held at `spectator`.
/// Intensity sums the real values of both flip directions.
struct TransitionLine {
    int flipped;
    Sign spectator;
    double intensity;
};

struct TransitionTable {
    std::vector<TransitionMoment> moments;  // all 16 sign tuples
    std::array<TransitionLine, 4> lines;    // p2 lines (spectator +, -), then p1 lines
};

TransitionTable transition_intensities(const DiagonalizationResult& r,
                                       ScalarPartMode mode = ScalarPartMode::Real);

}  // namespace mga
