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

#include <random>

#include "mga/element.hpp"

namespace mga {

using Rng = std::mt19937_64;

/// Uniformly random Pauli string on n particles.
PauliString random_pauli_string(Rng& rng, int n);

/// Up to `max_terms` random strings with coefficients uniform in [-1, 1] + i[-1, 1].
Element random_element(Rng& rng, int n, int max_terms = 8);

/// Random Element with real coefficients (reverse-invariant).
Element random_hermitian(Rng& rng, int n, int max_terms = 8);

/// iota times a random Hermitian Element.
Element random_anti_hermitian(Rng& rng, int n, int max_terms = 8);

/// A random rotor of particle `particle`: exp(-iota alpha a / 2).
Element random_single_rotor(Rng& rng, int particle, int n);

}  // namespace mga
