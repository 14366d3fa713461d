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

#include "mga/states.hpp"

#include <cmath>
#include <stdexcept>

namespace mga {

std::vector<SignTuple> sign_tuples(int n) {
    check_particle_count(n);
    std::vector<SignTuple> out;
    for (unsigned code = 0; code < (1u << n); ++code) {
        SignTuple eps(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) {
            eps[static_cast<std::size_t>(p)] = ((code >> (n - 1 - p)) & 1u) ? Sign::Minus : Sign::Plus;
        }
        out.push_back(std::move(eps));
    }
    return out;
}

Element basis_idempotent(const SignTuple& eps) {
    int n = static_cast<int>(eps.size());
    Element e = Element::identity(n);
    for (int p = 1; p <= n; ++p) e = e * idempotent_e(eps[static_cast<std::size_t>(p - 1)], p, n);
    return e;
}

SpinorDecomposition spinor_decompose(const Element& m) {
    const int n = m.n_particles();
    SpinorDecomposition d{n, {}};
    for (auto& eps : sign_tuples(n)) {
        d.components.emplace(eps, 2.0 * even_projection(m * basis_idempotent(eps)));
    }
    return d;
}

Element reconstruct(const SpinorDecomposition& d) {
    Element m(d.n_particles);
    for (const auto& [eps, psi] : d.components) m += psi * basis_idempotent(eps);
    return m;
}

Element density_from_spinors(const SpinorDecomposition& d, const std::map<SignTuple, double>& weights) {
    double total = 0.0;
    for (const auto& [eps, w] : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("density weights must be nonnegative");
        if (!d.components.contains(eps)) throw std::invalid_argument("weight for a sign tuple with no spinor");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("density weights must sum to one");

    Element rho(d.n_particles);
    for (const auto& [eps, w] : weights) {
        if (w == 0.0) continue;
        const Element& psi = d.components.at(eps);
        rho += w * (psi * basis_idempotent(eps) * reverse(psi));
    }
    return rho;
}

Element ghz_state() {
    auto p = [](const char* s) { return PauliString::from_text(s); };
    return Element(3, {
                          {p("III"), 0.125},
                          {p("ZZI"), 0.125},
                          {p("ZIZ"), 0.125},
                          {p("IZZ"), 0.125},
                          {p("XXX"), 0.125},
                          {p("YYX"), -0.125},
                          {p("YXY"), -0.125},
                          {p("XYY"), -0.125},
                      });
}

Element partial_trace_idempotent(const Element& rho, int m) {
    const int n = rho.n_particles();
    check_particle(m, n);
    Element ep = idempotent_e(Sign::Plus, m, n);
    Element em = idempotent_e(Sign::Minus, m, n);
    Element s1 = sigma(1, m, n);
    Element diag = ep * rho * ep + em * rho * em;
    return diag + s1 * diag * s1;
}

Element partial_trace_drop(const Element& rho, const std::set<int>& over) {
    const int n = rho.n_particles();
    for (int p : over) check_particle(p, n);
    double factor = std::ldexp(1.0, static_cast<int>(over.size()));
    std::vector<Term> kept;
    for (const auto& t : rho.terms()) {
        bool touches = false;
        for (int p : over) touches = touches || t.string.letter(p) != Letter::I;
        if (!touches) kept.push_back({t.string, factor * t.coeff});
    }
    return Element(n, std::move(kept));
}

Element restrict_particles(const Element& e, const std::set<int>& drop) {
    const int n = e.n_particles();
    for (int p : drop) check_particle(p, n);
    const int kept_n = n - static_cast<int>(drop.size());
    if (kept_n < 1) throw std::invalid_argument("cannot drop every particle");
    std::vector<Term> out;
    for (const auto& t : e.terms()) {
        PauliString s(kept_n);
        int q = 1;
        for (int p = 1; p <= n; ++p) {
            if (drop.contains(p)) {
                if (t.string.letter(p) != Letter::I) {
                    throw std::invalid_argument("cannot drop particle " + std::to_string(p) +
                                                ": term " + t.string.str() + " acts on it");
                }
                continue;
            }
            s = s.with_letter(q++, t.string.letter(p));
        }
        out.push_back({s, t.coeff});
    }
    return Element(kept_n, std::move(out));
}

}  // namespace mga
