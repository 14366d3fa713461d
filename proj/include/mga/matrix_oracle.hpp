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

// Dense 2^N x 2^N Pauli-matrix representation of the correlated ideal.
//
// Everything here is built from the 2x2 Pauli matrices and Kronecker products
// alone and never calls the geometric product, so it can serve as the
// independent check on the algebra kernel. Basis convention: the idempotent
// E_+ projects onto the first basis vector (sign + is bit 0) and particle 1
// is the most significant bit of the row index.

#pragma once

#include <Eigen/Dense>

#include "mga/element.hpp"

namespace mga {

using DenseMatrix = Eigen::MatrixXcd;

inline constexpr int kDefaultOracleCap = 10;

/// Largest particle count the oracle accepts. MGA_ORACLE_CAP overrides the
/// default of 10 (clamped to kMaxParticles).
int oracle_cap();

class MatrixRep {
   public:
    MatrixRep(int n, DenseMatrix entries);

    /// Zero matrix of the right dimension.
    explicit MatrixRep(int n);

    static MatrixRep identity(int n);

    int n_particles() const { return n_; }
    Eigen::Index dim() const { return entries_.rows(); }
    const DenseMatrix& entries() const { return entries_; }
    Complex operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

    MatrixRep adjoint() const { return {n_, entries_.adjoint()}; }
    Complex trace() const { return entries_.trace(); }

    friend MatrixRep operator*(const MatrixRep& a, const MatrixRep& b);
    friend MatrixRep operator+(const MatrixRep& a, const MatrixRep& b);
    friend MatrixRep operator-(const MatrixRep& a, const MatrixRep& b);
    friend MatrixRep operator*(Complex c, const MatrixRep& a) { return {a.n_, c * a.entries_}; }

   private:
    int n_;
    DenseMatrix entries_;
};

/// The 2x2 matrix of a single letter.
Eigen::Matrix2cd pauli_matrix(Letter l);

/// Kronecker product of the letters' 2x2 matrices.
MatrixRep to_matrix(const PauliString& p);

/// Linear extension over the terms. Throws std::length_error above the cap.
MatrixRep to_matrix(const Element& a);

/// Inverse of to_matrix: coefficient of P is trace(rep(P) m) / 2^N.
Element from_matrix(const MatrixRep& m);

/// As above for a raw square matrix; throws std::invalid_argument unless the
/// dimension is a power of two within the cap.
Element from_matrix(const DenseMatrix& m);

/// Exponential by scaling and squaring with a truncated Taylor series.
MatrixRep matrix_exp(const MatrixRep& m);

/// max |entry|.
double max_abs(const MatrixRep& m);

/// Largest off-diagonal |entry|.
double max_off_diagonal(const MatrixRep& m);

/// |trace(rep(u)^dagger rep(v))| / 2^N; 1 exactly when v = e^{i phi} u for
/// unitary u, v.
double fidelity_up_to_phase(const Element& u, const Element& v);
double fidelity_up_to_phase(const MatrixRep& u, const MatrixRep& v);

/// True iff u reverse(u) differs from 1 by less than tol in every coefficient.
bool is_unitary(const Element& u, double tol = 1e-10);

}  // namespace mga
