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

#include "mga/pauli_string.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace mga {

namespace {

// kPhase[a][b] is k in sigma_a sigma_b = i^k sigma_{a xor b}.
constexpr std::array<std::array<std::uint8_t, 4>, 4> kPhase = {{
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
}};

}  // namespace

char letter_char(Letter l) { return "IXYZ"[static_cast<int>(l)]; }

LetterProduct multiply_letters(Letter a, Letter b) {
    auto ia = static_cast<std::uint8_t>(a);
    auto ib = static_cast<std::uint8_t>(b);
    return {static_cast<Letter>(ia ^ ib), kPhase[ia][ib]};
}

void check_particle_count(int n) {
    if (n < 1 || n > kMaxParticles) {
        throw std::invalid_argument("particle count " + std::to_string(n) + " outside 1.." +
                                    std::to_string(kMaxParticles));
    }
}

void check_particle(int particle, int n) {
    if (particle < 1 || particle > n) {
        throw std::out_of_range("particle " + std::to_string(particle) + " out of range 1.." +
                                std::to_string(n));
    }
}

PauliString::PauliString(int n) : n_(n), bits_(0) { check_particle_count(n); }

PauliString PauliString::from_text(std::string_view text) {
    PauliString p(static_cast<int>(text.size()));
    for (std::size_t k = 0; k < text.size(); ++k) {
        Letter l;
        switch (text[k]) {
            case 'I': l = Letter::I; break;
            case 'X': l = Letter::X; break;
            case 'Y': l = Letter::Y; break;
            case 'Z': l = Letter::Z; break;
            default:
                throw std::invalid_argument("bad Pauli letter '" + std::string(1, text[k]) +
                                            "' in \"" + std::string(text) + "\"");
        }
        p = p.with_letter(static_cast<int>(k) + 1, l);
    }
    return p;
}

Letter PauliString::letter(int particle) const {
    check_particle(particle, n_);
    return static_cast<Letter>((bits_ >> shift(particle)) & 3u);
}

PauliString PauliString::with_letter(int particle, Letter l) const {
    check_particle(particle, n_);
    auto s = shift(particle);
    auto bits = (bits_ & ~(3u << s)) | (static_cast<std::uint32_t>(l) << s);
    return PauliString(n_, bits);
}

int PauliString::weight() const {
    // A slot is non-identity when either of its two bits is set.
    constexpr std::uint32_t kLow = 0x55555555u;
    return std::popcount((bits_ | (bits_ >> 1)) & kLow);
}

std::uint32_t PauliString::flip_mask() const {
    std::uint32_t mask = 0;
    for (int p = 1; p <= n_; ++p) {
        auto l = letter(p);
        if (l == Letter::X || l == Letter::Y) mask |= 1u << (n_ - p);
    }
    return mask;
}

std::string PauliString::str() const {
    std::string out(static_cast<std::size_t>(n_), 'I');
    for (int p = 1; p <= n_; ++p) out[static_cast<std::size_t>(p - 1)] = letter_char(letter(p));
    return out;
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("particle-count mismatch in Pauli product");
    unsigned phase = 0;
    for (int s = 0; s < 2 * a.n_; s += 2) {
        phase += kPhase[(a.bits_ >> s) & 3u][(b.bits_ >> s) & 3u];
    }
    return {PauliString(a.n_, a.bits_ ^ b.bits_), static_cast<std::uint8_t>(phase & 3u)};
}

}  // namespace mga
