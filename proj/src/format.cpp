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


#include "mga/format.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace mga {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string complex_text(Complex c) {
    char buf[64];
    // Adding 0.0 turns -0 into 0.
    std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", c.real() + 0.0, c.imag() + 0.0);
    return buf;
}

std::string blade_text(const PauliString& s) {
    std::string out;
    for (int p = 1; p <= s.n_particles(); ++p) {
        Letter l = s.letter(p);
        if (l == Letter::I) continue;
        out += " s" + std::to_string(static_cast<int>(l)) + "^" + std::to_string(p);
    }
    return out;
}

// Integral values print without a trailing ".0".
ordered_json number_json(double v) {
    if (v == std::trunc(v) && std::abs(v) < 9.0e15) return static_cast<std::int64_t>(v);
    return v;
}

}  // namespace

std::string format_matrix(const MatrixRep& m) {
    std::string out;
    for (Eigen::Index r = 0; r < m.dim(); ++r) {
        for (Eigen::Index c = 0; c < m.dim(); ++c) out += (c ? " " : "") + complex_text(m(r, c));
        out += "\n";
    }
    return out;
}

std::string format_element(const Element& e, FormatMode mode) {
    switch (mode) {
        case FormatMode::Text: {
            if (e.is_zero()) return "0";
            std::string out;
            for (const auto& t : e.terms()) {
                if (!out.empty()) out += " + ";
                out += complex_text(t.coeff) + blade_text(t.string);
            }
            return out;
        }
        case FormatMode::Json: {
            ordered_json terms = ordered_json::array();
            for (const auto& t : e.terms()) {
                terms.push_back(
                    {{"pauli", t.string.str()}, {"re", number_json(t.coeff.real())}, {"im", number_json(t.coeff.imag())}});
            }
            return ordered_json{{"n", e.n_particles()}, {"terms", terms}}.dump();
        }
        case FormatMode::Matrix:
            return format_matrix(to_matrix(e));
    }
    throw std::logic_error("unhandled format mode");
}

Element element_from_json(std::string_view text) {
    try {
        json j = json::parse(text);
        int n = j.at("n").get<int>();
        check_particle_count(n);
        std::vector<Term> terms;
        for (const auto& t : j.at("terms")) {
            auto pauli = t.at("pauli").get<std::string>();
            if (static_cast<int>(pauli.size()) != n) {
                throw std::invalid_argument("pauli string \"" + pauli + "\" does not have length " + std::to_string(n));
            }
            terms.push_back({PauliString::from_text(pauli), Complex(t.at("re").get<double>(), t.at("im").get<double>())});
        }
        return Element(n, std::move(terms));
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("bad Element JSON: ") + ex.what());
    }
}

}  // namespace mga
