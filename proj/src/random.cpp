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

#include "mga/random.hpp"

#include <numbers>

#include "mga/propagators.hpp"

namespace mga {

PauliString random_pauli_string(Rng& rng, int n) {
    std::uniform_int_distribution<int> letter(0, 3);
    PauliString p(n);
    for (int q = 1; q <= n; ++q) p = p.with_letter(q, static_cast<Letter>(letter(rng)));
    return p;
}

Element random_element(Rng& rng, int n, int max_terms) {
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::vector<Term> terms;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
        double re = coeff(rng);
        double im = coeff(rng);
        terms.push_back({random_pauli_string(rng, n), Complex(re, im)});
    }
    return Element(n, std::move(terms));
}

Element random_hermitian(Rng& rng, int n, int max_terms) {
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::vector<Term> terms;
    int k = count(rng);
    for (int i = 0; i < k; ++i) terms.push_back({random_pauli_string(rng, n), coeff(rng)});
    return Element(n, std::move(terms));
}

Element random_anti_hermitian(Rng& rng, int n, int max_terms) {
    return Complex(0.0, 1.0) * random_hermitian(rng, n, max_terms);
}

Element random_single_rotor(Rng& rng, int particle, int n) {
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double x = gauss(rng);
    double y = gauss(rng);
    double z = gauss(rng);
    double a = angle(rng);
    return rotor(AxisVector::normalized(x, y, z), a, particle, n);
}

}  // namespace mga
