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


#include "mga/nmr.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mga/propagators.hpp"

namespace mga {

namespace {

constexpr double kPi = std::numbers::pi;

void check_pair(int p1, int p2, int n) {
    check_particle(p1, n);
    check_particle(p2, n);
    if (p1 == p2) throw std::invalid_argument("a spin pair needs two distinct particles");
}

}  // namespace

SpinSystem::SpinSystem(std::vector<double> omega) : omega_(std::move(omega)) {
    check_particle_count(n_particles());
    for (double w : omega_) {
        if (!std::isfinite(w)) throw std::invalid_argument("resonance frequencies must be finite");
    }
}

SpinSystem SpinSystem::two_spin(double omega1, double omega2, double j_hz) {
    SpinSystem s({omega1, omega2});
    s.set_coupling(1, 2, j_hz);
    return s;
}

double SpinSystem::omega(int p) const {
    check_particle(p, n_particles());
    return omega_[static_cast<std::size_t>(p - 1)];
}

double SpinSystem::coupling(int p1, int p2) const {
    check_pair(p1, p2, n_particles());
    auto it = j_hz_.find(std::minmax(p1, p2));
    return it == j_hz_.end() ? 0.0 : it->second;
}

void SpinSystem::set_coupling(int p1, int p2, double j_hz) {
    check_pair(p1, p2, n_particles());
    if (!std::isfinite(j_hz)) throw std::invalid_argument("coupling constants must be finite");
    j_hz_[std::minmax(p1, p2)] = j_hz;
}

Element zeeman(const SpinSystem& s) {
    const int n = s.n_particles();
    Element k(n);
    for (int m = 1; m <= n; ++m) k += (0.5 * s.omega(m)) * sigma(3, m, n);
    return k;
}

Element pair_zeeman(const SpinSystem& s, int p1, int p2) {
    const int n = s.n_particles();
    check_pair(p1, p2, n);
    return (0.5 * s.omega(p1)) * sigma(3, p1, n) + (0.5 * s.omega(p2)) * sigma(3, p2, n);
}

Element full_hamiltonian(const SpinSystem& s, int p1, int p2) {
    return scalar_coupling_hamiltonian(s.coupling(p1, p2), p1, p2, s.n_particles()) + pair_zeeman(s, p1, p2);
}

Element full_hamiltonian_correlated(const SpinSystem& s, int p1, int p2) {
    const int n = s.n_particles();
    const double pj = kPi * s.coupling(p1, p2);
    Element zz = sigma(3, p1, n) * sigma(3, p2, n);
    Element xx = sigma(1, p1, n) * sigma(1, p2, n);
    return pair_zeeman(s, p1, p2) + pj * (0.5 * zz + xx * correlated_idempotent(Sign::Minus, p1, p2, n));
}

Element weak_hamiltonian(const SpinSystem& s, int p1, int p2) {
    const int n = s.n_particles();
    Element zz = sigma(3, p1, n) * sigma(3, p2, n);
    return pair_zeeman(s, p1, p2) + (0.5 * kPi * s.coupling(p1, p2)) * zz;
}

DiagonalizationResult diagonalize_two_spin(const SpinSystem& s, int p1, int p2) {
    const int n = s.n_particles();
    check_pair(p1, p2, n);
    const double nu_plus = 0.5 * (s.omega(p1) + s.omega(p2));
    const double nu_minus = 0.5 * (s.omega(p1) - s.omega(p2));
    const double pj = kPi * s.coupling(p1, p2);

    DiagonalizationResult r{n, p1, p2, Element::identity(n), 0.0, 0.0, Element(n)};
    if (nu_minus != 0.0 || pj != 0.0) {
        r.theta = std::hypot(nu_minus, pj);
        r.phi = std::atan2(pj, nu_minus);
        Element factor = sigma(2, p1, n) * sigma(1, p2, n);
        Element e_minus = correlated_idempotent(Sign::Minus, p1, p2, n);
        r.T = exp_element(factor * e_minus, Complex(0.0, -r.phi / 2),
                          IdempotentFactorization{factor, e_minus});
    }
    r.h_diag = (0.5 * (nu_plus + r.theta)) * sigma(3, p1, n) + (0.5 * (nu_plus - r.theta)) * sigma(3, p2, n) +
               (0.5 * pj) * (sigma(3, p1, n) * sigma(3, p2, n));
    return r;
}

TransitionTable transition_intensities(const DiagonalizationResult& r, ScalarPartMode mode) {
    const int n = r.n_particles;
    Element m = reverse(r.T) * (sigma(1, r.p1, n) + sigma(1, r.p2, n)) * r.T;

    TransitionTable table{};
    for (Sign e1 : {Sign::Plus, Sign::Minus})
        for (Sign e1p : {Sign::Plus, Sign::Minus})
            for (Sign e2 : {Sign::Plus, Sign::Minus})
                for (Sign e2p : {Sign::Plus, Sign::Minus}) {
                    Element a = idempotent_e(e1, r.p1, n) * m * idempotent_e(e1p, r.p1, n);
                    Element b = idempotent_e(e2, r.p2, n) * m * idempotent_e(e2p, r.p2, n);
                    Complex v = scalar_part(a * b);
                    if (mode == ScalarPartMode::Real) v = v.real();
                    table.moments.push_back({e1, e1p, e2, e2p, v});
                }

    auto line = [&](int flipped, Sign spectator) {
        double total = 0.0;
        for (const auto& t : table.moments) {
            bool flips1 = t.e1 != t.e1_prime, flips2 = t.e2 != t.e2_prime;
            if (flipped == r.p2 && !flips1 && flips2 && t.e1 == spectator) total += t.value.real();
            if (flipped == r.p1 && flips1 && !flips2 && t.e2 == spectator) total += t.value.real();
        }
        return TransitionLine{flipped, spectator, total};
    };
    table.lines = {line(r.p2, Sign::Plus), line(r.p2, Sign::Minus), line(r.p1, Sign::Plus),
                   line(r.p1, Sign::Minus)};
    return table;
}

}  // namespace mga
