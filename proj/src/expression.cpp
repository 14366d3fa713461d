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


#include "mga/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "mga/propagators.hpp"
#include "mga/states.hpp"

namespace mga {

namespace {

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + xs[k];
    return out;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

const std::vector<std::string> kFactorStart = {"number", "pi", "i", "ghz", "s1^m", "s2^m", "s3^m", "E+^m",
                                               "E-^m", "Pi^{m,n}", "exp", "rev", "hat", "even", "sqrt",
                                               "ptrace_m", "(", "-"};

class Parser {
   public:
    Parser(std::string_view src, int n) : src_(src), n_(n) {}

    Ast parse() {
        Ast a = expr();
        skip_ws();
        if (pos_ != src_.size()) fail(pos_, {"+", "-", "*", "/", "end of input"}, "unexpected trailing input");
        return a;
    }

   private:
    std::string_view src_;
    int n_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::size_t at, std::vector<std::string> expected, const std::string& msg) {
        throw ParseError(at, std::move(expected), msg);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(pos_, {std::string(1, c)}, std::string("expected '") + c + "'");
        ++pos_;
    }

    static Ast binary(Ast::Kind k, Ast l, Ast r) {
        Ast a;
        a.kind = k;
        a.children.push_back(std::move(l));
        a.children.push_back(std::move(r));
        return a;
    }

    Ast expr() {
        Ast left = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            left = binary(c == '+' ? Ast::Kind::Add : Ast::Kind::Subtract, std::move(left), term());
        }
        return left;
    }

    bool starts_factor(char c) { return c == '(' || c == '.' || is_digit(c) || is_ident_start(c); }

    Ast term() {
        Ast left = factor();
        for (;;) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                left = binary(c == '*' ? Ast::Kind::Multiply : Ast::Kind::Divide, std::move(left), factor());
            } else if (starts_factor(c)) {
                left = binary(Ast::Kind::Multiply, std::move(left), factor());
            } else {
                return left;
            }
        }
    }

    Ast factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            Ast a;
            a.kind = Ast::Kind::Negate;
            a.children.push_back(factor());
            return a;
        }
        if (c == '(') {
            ++pos_;
            Ast a = expr();
            expect(')');
            return a;
        }
        if (is_digit(c) || c == '.') return number();
        if (is_ident_start(c)) return symbol();
        fail(pos_, kFactorStart, c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    Ast number() {
        std::size_t start = pos_;
        std::size_t end = pos_;
        while (end < src_.size() && is_digit(src_[end])) ++end;
        if (end < src_.size() && src_[end] == '.') {
            ++end;
            while (end < src_.size() && is_digit(src_[end])) ++end;
        }
        if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
            std::size_t k = end + 1;
            if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
            if (k < src_.size() && is_digit(src_[k])) {
                end = k;
                while (end < src_.size() && is_digit(src_[end])) ++end;
            }
        }
        Ast a;
        auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + end, a.value);
        if (ec != std::errc() || ptr != src_.data() + end) fail(start, {"number"}, "malformed number");
        pos_ = end;
        return a;
    }

    int index() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        if (start == pos_) fail(start, {"particle index"}, "expected a particle index");
        int v = 0;
        auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (ec != std::errc() || v < 1 || v > n_) {
            fail(start, {"1.." + std::to_string(n_)},
                 "particle index " + std::string(src_.substr(start, pos_ - start)) + " out of range 1.." +
                     std::to_string(n_));
        }
        return v;
    }

    // '^' followed by m, {m} or {m,n}; returns the number of indices read.
    int superscript(int& a, int& b, int want) {
        expect('^');
        if (peek() != '{') {
            if (want == 2) fail(pos_, {"{"}, "expected '{m,n}'");
            a = index();
            return 1;
        }
        ++pos_;
        a = index();
        int count = 1;
        if (peek() == ',') {
            ++pos_;
            b = index();
            count = 2;
        }
        expect('}');
        return count;
    }

    Ast symbol() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
        std::string name(src_.substr(start, pos_ - start));
        Ast a;

        if (name == "pi") {
            a.kind = Ast::Kind::Pi;
            return a;
        }
        if (name == "i") {
            a.kind = Ast::Kind::ImagUnit;
            return a;
        }
        if (name == "ghz") {
            a.kind = Ast::Kind::Ghz;
            return a;
        }
        if (name.size() >= 2 && name[0] == 's' && std::all_of(name.begin() + 1, name.end(), is_digit)) {
            if (name != "s1" && name != "s2" && name != "s3") {
                fail(start, {"1", "2", "3"}, "unknown basis axis " + name.substr(1) + "; expected axis in {1,2,3}");
            }
            a.kind = Ast::Kind::Basis;
            a.axis = name[1] - '0';
            int unused = 0;
            superscript(a.i1, unused, 1);
            return a;
        }
        if (name == "E") {
            char s = pos_ < src_.size() ? src_[pos_] : '\0';
            if (s != '+' && s != '-') fail(pos_, {"E+", "E-"}, "expected '+' or '-' after E");
            ++pos_;
            a.sign = s == '+' ? Sign::Plus : Sign::Minus;
            int count = superscript(a.i1, a.i2, 1);
            a.kind = count == 1 ? Ast::Kind::Idempotent : Ast::Kind::Correlated;
            if (count == 2 && a.i1 == a.i2) fail(start, {"distinct indices"}, "correlated idempotent needs two particles");
            return a;
        }
        if (name == "Pi") {
            a.kind = Ast::Kind::Interchange;
            superscript(a.i1, a.i2, 2);
            if (a.i1 == a.i2) fail(start, {"distinct indices"}, "interchange needs two particles");
            return a;
        }
        bool is_ptrace = name.rfind("ptrace_", 0) == 0;
        if (name == "exp" || name == "rev" || name == "hat" || name == "even" || name == "sqrt" || is_ptrace) {
            if (is_ptrace) {
                std::string digits = name.substr(7);
                int m = 0;
                auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
                if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || m < 1 ||
                    m > n_) {
                    fail(start + 7, {"1.." + std::to_string(n_)}, "ptrace particle out of range");
                }
            }
            a.kind = Ast::Kind::Call;
            a.func = name;
            expect('(');
            a.children.push_back(expr());
            expect(')');
            return a;
        }
        fail(start, kFactorStart, "unknown symbol '" + name + "'");
    }
};

int precedence(const Ast& a) {
    switch (a.kind) {
        case Ast::Kind::Add:
        case Ast::Kind::Subtract:
            return 1;
        case Ast::Kind::Multiply:
        case Ast::Kind::Divide:
            return 2;
        case Ast::Kind::Negate:
            return 3;
        default:
            return 4;
    }
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string index_sup(int a) { return "^" + std::to_string(a); }
std::string pair_sup(int a, int b) { return "^{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

void print(const Ast& a, std::string& out);

void print_child(const Ast& c, bool parens, std::string& out) {
    if (parens) out += "(";
    print(c, out);
    if (parens) out += ")";
}

void print(const Ast& a, std::string& out) {
    using K = Ast::Kind;
    switch (a.kind) {
        case K::Number:
            out += format_number(a.value);
            return;
        case K::Pi:
            out += "pi";
            return;
        case K::ImagUnit:
            out += "i";
            return;
        case K::Ghz:
            out += "ghz";
            return;
        case K::Basis:
            out += "s" + std::to_string(a.axis) + index_sup(a.i1);
            return;
        case K::Idempotent:
            out += (a.sign == Sign::Plus ? "E+" : "E-") + index_sup(a.i1);
            return;
        case K::Correlated:
            out += (a.sign == Sign::Plus ? "E+" : "E-") + pair_sup(a.i1, a.i2);
            return;
        case K::Interchange:
            out += "Pi" + pair_sup(a.i1, a.i2);
            return;
        case K::Negate:
            out += "-";
            print_child(a.children[0], precedence(a.children[0]) < 3, out);
            return;
        case K::Call:
            out += a.func + "(";
            print(a.children[0], out);
            out += ")";
            return;
        default:
            break;
    }
    const char* op = a.kind == K::Add ? " + " : a.kind == K::Subtract ? " - " : a.kind == K::Multiply ? " * " : " / ";
    int p = precedence(a);
    print_child(a.children[0], precedence(a.children[0]) < p, out);
    out += op;
    // A leading '-' on the right operand of a product would parse as a subtraction.
    print_child(a.children[1], precedence(a.children[1]) <= p || (p == 2 && a.children[1].kind == K::Negate), out);
}

bool is_positive_real_scalar(const Element& e, double& v) {
    if (!e.is_scalar()) return false;
    Complex c = scalar_part(e);
    if (c.imag() != 0.0 || c.real() < 0.0) return false;
    v = c.real();
    return true;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : std::invalid_argument("parse error at offset " + std::to_string(offset) + ": " + message +
                            (expected.empty() ? "" : " (expected: " + join(expected) + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

Ast parse_expression(std::string_view src, int n) {
    check_particle_count(n);
    return Parser(src, n).parse();
}

std::string print_ast(const Ast& a) {
    std::string out;
    print(a, out);
    return out;
}

Element eval_ast(const Ast& a, int n) {
    using K = Ast::Kind;
    switch (a.kind) {
        case K::Number:
            return Element::scalar(n, a.value);
        case K::Pi:
            return Element::scalar(n, std::numbers::pi);
        case K::ImagUnit:
            return iota(n);
        case K::Ghz: {
            Element g = ghz_state();
            if (n != g.n_particles()) throw std::invalid_argument("ghz is a three-particle state; use --n 3");
            return g;
        }
        case K::Basis:
            return sigma(a.axis, a.i1, n);
        case K::Idempotent:
            return idempotent_e(a.sign, a.i1, n);
        case K::Correlated:
            return correlated_idempotent(a.sign, a.i1, a.i2, n);
        case K::Interchange:
            return particle_interchange(a.i1, a.i2, n);
        case K::Add:
            return eval_ast(a.children[0], n) + eval_ast(a.children[1], n);
        case K::Subtract:
            return eval_ast(a.children[0], n) - eval_ast(a.children[1], n);
        case K::Multiply:
            return eval_ast(a.children[0], n) * eval_ast(a.children[1], n);
        case K::Divide: {
            Element d = eval_ast(a.children[1], n);
            if (!d.is_scalar() || d.is_zero()) throw std::invalid_argument("division is only by nonzero scalars");
            return eval_ast(a.children[0], n) * (1.0 / scalar_part(d));
        }
        case K::Negate:
            return -eval_ast(a.children[0], n);
        case K::Call: {
            Element x = eval_ast(a.children[0], n);
            if (a.func == "exp") return exp_element(x);
            if (a.func == "rev") return reverse(x);
            if (a.func == "hat") return grade_involution(x);
            if (a.func == "even") return even_projection(x);
            if (a.func == "sqrt") {
                double v = 0.0;
                if (!is_positive_real_scalar(x, v)) throw std::invalid_argument("sqrt needs a nonnegative real scalar");
                return Element::scalar(n, std::sqrt(v));
            }
            return partial_trace_idempotent(x, std::stoi(a.func.substr(7)));
        }
    }
    throw std::logic_error("unhandled expression node");
}

Element evaluate(std::string_view src, int n) { return eval_ast(parse_expression(src, n), n); }

}  // namespace mga
