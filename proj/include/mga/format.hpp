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

#include <string>
#include <string_view>

#include "mga/element.hpp"
#include "mga/matrix_oracle.hpp"

namespace mga {

enum class FormatMode { Text, Json, Matrix };

/// Text: "(a+bi) s1^1 s3^2 + ..." in string order, 12 significant digits,
/// "0" for the zero Element. Json: {"n", "terms": [{"pauli", "re", "im"}]}.
/// Matrix: one row per line of the oracle matrix.
std::string format_element(const Element& e, FormatMode mode);

std::string format_matrix(const MatrixRep& m);

/// Reads the Json form. Terms may come in any order; repeats are summed.
Element element_from_json(std::string_view text);

}  // namespace mga
