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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mga {

inline constexpr int kMaxParticles = 16;

/// One factor of a blade: the identity or one of the three basis vectors
/// sigma_1, sigma_2, sigma_3 of a single particle.
enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(Letter l);

/// Product of two single-particle letters. `phase` is the exponent k of the
/// factor i^k (k in 0..3) produced by sigma_a sigma_b = delta_ab + i eps_abc sigma_c.
struct LetterProduct {
    Letter letter;
    std::uint8_t phase;
};

LetterProduct multiply_letters(Letter a, Letter b);

/// A blade label: one letter per particle, packed two bits per particle.
///
/// Particle 1 occupies the most significant letter slot, so numeric order of
/// the packed word equals lexicographic order of the I/X/Y/Z text for strings
/// of equal length. Particle indices in the public interface are 1-based.
class PauliString {
   public:
    /// The identity string on `n` particles.
    explicit PauliString(int n = 1);

    /// Parses text over {I, X, Y, Z}; its length is the particle count.
    static PauliString from_text(std::string_view text);

    int n_particles() const { return n_; }
    std::uint32_t bits() const { return bits_; }

    Letter letter(int particle) const;
    PauliString with_letter(int particle, Letter l) const;

    /// Number of non-identity letters.
    int weight() const;
    bool is_identity() const { return bits_ == 0; }

    /// Mask of particles carrying X or Y, bit (n - particle) set; this is the
    /// row-to-column permutation of the Kronecker representation.
    std::uint32_t flip_mask() const;

    std::string str() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
    friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

   private:
    PauliString(int n, std::uint32_t bits) : n_(n), bits_(bits) {}
    int shift(int particle) const { return 2 * (n_ - particle); }

    friend struct PauliProduct multiply(const PauliString& a, const PauliString& b);

    int n_;
    std::uint32_t bits_;
};

struct PauliProduct {
    PauliString string;
    std::uint8_t phase;  // exponent of i
};

/// Letterwise product with accumulated phase. Letters of different particles
/// commute, so the phase is the product of the per-particle phases.
PauliProduct multiply(const PauliString& a, const PauliString& b);

/// Throws std::out_of_range unless 1 <= particle <= n.
void check_particle(int particle, int n);

/// Throws std::invalid_argument unless 1 <= n <= kMaxParticles.
void check_particle_count(int n);

}  // namespace mga
