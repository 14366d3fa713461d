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

#include <map>
#include <set>
#include <vector>

#include "mga/element.hpp"

namespace mga {

/// (eps_1, ..., eps_N), one idempotent sign per particle.
using SignTuple = std::vector<Sign>;

/// All 2^n sign tuples, (+,...,+) first, particle n varying fastest.
std::vector<SignTuple> sign_tuples(int n);

/// E_eps = E_{eps_1}^1 ... E_{eps_N}^N.
Element basis_idempotent(const SignTuple& eps);

/// m = sum_eps psi_eps E_eps with every psi_eps in the even subalgebra.
struct SpinorDecomposition {
    int n_particles;
    std::map<SignTuple, Element> components;
};

/// psi_eps = 2 <m E_eps>_+. The factor is 2 for every N: m E_eps = (m E_eps +
/// hat(m) E_{-eps}) E_eps because E_{-eps} E_eps = 0 whenever any sign flips.
SpinorDecomposition spinor_decompose(const Element& m);

/// sum_eps psi_eps E_eps.
Element reconstruct(const SpinorDecomposition& d);

/// rho = sum_eps w_eps psi_eps E_eps reverse(psi_eps). Weights must be
/// nonnegative and sum to one; tuples without a weight count as zero.
Element density_from_spinors(const SpinorDecomposition& d, const std::map<SignTuple, double>& weights);

/// The three-particle GHZ density element (8 terms, coefficients +-1/8).
Element ghz_state();

/// Tr_m(rho) = E+ rho E+ + E- rho E- + s1^m (E+ rho E+ + E- rho E-) s1^m.
/// The result keeps N particles with the identity at position m.
Element partial_trace_idempotent(const Element& rho, int m);

/// Drops every term with a non-identity letter on a traced particle and
/// multiplies the rest by 2^|over|.
Element partial_trace_drop(const Element& rho, const std::set<int>& over);

/// Removes the listed particles, which must carry only identity letters.
/// The result has n - |drop| particles in the original order.
Element restrict_particles(const Element& e, const std::set<int>& drop);

}  // namespace mga
