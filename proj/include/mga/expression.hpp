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


// A small expression language for Elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/')? factor)*       juxtaposition is a product
//   factor := number | 'pi' | 'i' | 'ghz' | symbol
//           | func '(' expr ')' | '(' expr ')' | '-' factor
//   symbol := ('s1'|'s2'|'s3') '^' idx | ('E+'|'E-') '^' idx
//           | ('E+'|'E-') '^{' idx ',' idx '}' | 'Pi^{' idx ',' idx '}'
//   func   := 'exp' | 'rev' | 'hat' | 'even' | 'sqrt' | 'ptrace_' digits
//
// Indices are 1-based; '^{m}' is accepted wherever '^m' is.

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mga/element.hpp"

namespace mga {

class ParseError : public std::invalid_argument {
   public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

   private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

struct Ast {
    enum class Kind {
        Number,       // value >= 0
        Pi,
        ImagUnit,
        Ghz,
        Basis,        // axis, i1
        Idempotent,   // sign, i1
        Correlated,   // sign, i1, i2
        Interchange,  // i1, i2
        Add,
        Subtract,
        Multiply,
        Divide,
        Negate,
        Call,         // func, one child
    };

    Kind kind = Kind::Number;
    double value = 0.0;
    int axis = 0;
    Sign sign = Sign::Plus;
    int i1 = 0;
    int i2 = 0;
    std::string func;
    std::vector<Ast> children;

    bool operator==(const Ast&) const = default;
};

Ast parse_expression(std::string_view src, int n);

/// Prints with the minimum parentheses the grammar needs, so that
/// parse_expression(print_ast(a), n) == a for nonnegative Number values.
std::string print_ast(const Ast& a);

Element eval_ast(const Ast& a, int n);

/// parse then eval.
Element evaluate(std::string_view src, int n);

}  // namespace mga
