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


// Seeded self-checks behind `mga verify`.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mga/matrix_oracle.hpp"

namespace mga {

struct CheckResult {
    std::string suite;
    std::string name;
    double residual;
    double tolerance;
    bool passed;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int trials = 100;
};

/// axioms, oracle, cnot-seq, qft, ghz.
const std::vector<std::string>& verify_suites();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options = {});

std::string verify_json(const std::vector<CheckResult>& results, const VerifyOptions& options);

/// The DFT that the QFT reproduces up to a global phase:
/// Y F R Y with F(j,k) = 2^{-n/2} exp(-2 pi i j k / 2^n), R the bit reversal
/// of the input index and Y = s2 on every particle.
MatrixRep framed_dft(int n);

}  // namespace mga
