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


#include "mga/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "json.hpp"
#include "mga/gates.hpp"
#include "mga/propagators.hpp"
#include "mga/random.hpp"
#include "mga/states.hpp"

namespace mga {

namespace {

constexpr double kTol = 1e-10;

class Suite {
   public:
    explicit Suite(std::string name) : name_(std::move(name)) {}

    void record(const std::string& check, double residual, double tolerance = kTol) {
        out_.push_back({name_, check, residual, tolerance, std::isfinite(residual) && residual <= tolerance});
    }

    std::vector<CheckResult> take() { return std::move(out_); }

   private:
    std::string name_;
    std::vector<CheckResult> out_;
};

// Largest residual over trials at each N.
template <class F>
double worst(F&& f, int trials) {
    double r = 0.0;
    for (int t = 0; t < trials; ++t) r = std::max(r, f());
    return r;
}

std::vector<CheckResult> axioms(const VerifyOptions& o) {
    Suite s("axioms");
    Rng rng(o.seed);
    for (int n = 1; n <= 4; ++n) {
        double assoc = 0, dist = 0, rev = 0, hat = 0;
        for (int t = 0; t < o.trials; ++t) {
            Element a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
            assoc = std::max(assoc, max_abs_difference((a * b) * c, a * (b * c)));
            dist = std::max({dist, max_abs_difference(a * (b + c), a * b + a * c),
                             max_abs_difference((a + b) * c, a * c + b * c)});
            rev = std::max({rev, max_abs_difference(reverse(a * b), reverse(b) * reverse(a)),
                            max_abs_difference(reverse(reverse(a)), a)});
            hat = std::max({hat, max_abs_difference(grade_involution(a * b), grade_involution(a) * grade_involution(b)),
                            max_abs_difference(grade_involution(grade_involution(a)), a)});
        }
        double anti = 0, across = 0;
        for (int p = 1; p <= n; ++p) {
            for (int i = 1; i <= 3; ++i) {
                for (int j = 1; j <= 3; ++j) {
                    Element si = sigma(i, p, n), sj = sigma(j, p, n);
                    anti = std::max(anti, max_abs_difference(si * sj + sj * si,
                                                             Element::scalar(n, i == j ? 2.0 : 0.0)));
                    for (int q = 1; q <= n; ++q) {
                        if (q == p) continue;
                        Element tj = sigma(j, q, n);
                        across = std::max(across, max_abs_difference(si * tj, tj * si));
                    }
                }
            }
        }
        std::string sfx = " n=" + std::to_string(n);
        s.record("associativity" + sfx, assoc);
        s.record("distributivity" + sfx, dist);
        s.record("same-particle anticommutation" + sfx, anti, 0.0);
        s.record("cross-particle commutation" + sfx, across, 0.0);
        s.record("reverse anti-automorphism" + sfx, rev);
        s.record("grade involution automorphism" + sfx, hat);
    }
    return s.take();
}

std::vector<CheckResult> oracle(const VerifyOptions& o) {
    Suite s("oracle");
    Rng rng(o.seed + 1);
    for (int n = 1; n <= 4; ++n) {
        double prod = 0, adj = 0, trace = 0, back = 0;
        for (int t = 0; t < o.trials; ++t) {
            Element a = random_element(rng, n), b = random_element(rng, n);
            MatrixRep ra = to_matrix(a);
            prod = std::max(prod, max_abs(to_matrix(a * b) - ra * to_matrix(b)));
            adj = std::max(adj, max_abs(to_matrix(reverse(a)) - ra.adjoint()));
            trace = std::max(trace, std::abs(scalar_part(a) - ra.trace() / std::ldexp(1.0, n)));
            back = std::max(back, max_abs_difference(from_matrix(ra), a));
        }
        std::string sfx = " n=" + std::to_string(n);
        s.record("product homomorphism" + sfx, prod);
        s.record("reverse is adjoint" + sfx, adj);
        s.record("scalar part is normalized trace" + sfx, trace);
        s.record("matrix round trip" + sfx, back);
    }
    return s.take();
}

std::vector<CheckResult> cnot_seq(const VerifyOptions&) {
    Suite s("cnot-seq");
    const int n = 2;
    Element seq = cnot_pulse_sequence().propagator;
    Element target = cnot(1, 2, n, CnotVariant::PhaseCorrected);
    s.record("sequence vs two-branch form", max_abs_difference(seq, cnot_sequence_closed_form()), 1e-12);
    s.record("left correction fidelity deficit",
             1.0 - fidelity_up_to_phase(cnot_sequence_left_correction() * seq, target));
    Element phase = conditional_exp(Element::scalar(n, Complex(0.0, std::numbers::pi / 2)),
                                    idempotent_e(Sign::Minus, 2, n));
    s.record("right correction vs bare CNOT",
             max_abs_difference(seq * cnot_sequence_right_correction(), cnot(1, 2, n, CnotVariant::Bare)));
    s.record("right correction with conditional phase",
             max_abs_difference(seq * cnot_sequence_right_correction() * phase, target));
    return s.take();
}

std::vector<CheckResult> qft_suite(const VerifyOptions&) {
    Suite s("qft");
    for (int n = 1; n <= 4; ++n) {
        std::string sfx = " n=" + std::to_string(n);
        Element rec = qft(n, QftForm::Recursive);
        s.record("recursive vs rearranged" + sfx, max_abs_difference(rec, qft(n, QftForm::Rearranged)));
        MatrixRep m = to_matrix(rec);
        double flat = 0.0, expected = std::ldexp(1.0, -n) * std::sqrt(std::ldexp(1.0, n));
        for (Eigen::Index r = 0; r < m.dim(); ++r)
            for (Eigen::Index c = 0; c < m.dim(); ++c) flat = std::max(flat, std::abs(std::abs(m(r, c)) - expected));
        s.record("entry modulus 2^(-n/2)" + sfx, flat);
        s.record("unitarity" + sfx, max_abs_difference(rec * reverse(rec), Element::identity(n)));
        s.record("framed DFT fidelity deficit" + sfx, 1.0 - fidelity_up_to_phase(m, framed_dft(n)));
    }
    return s.take();
}

std::vector<CheckResult> ghz(const VerifyOptions& o) {
    Suite s("ghz");
    const int n = 3;
    Element rho = ghz_state();
    Element mixed = 0.25 * (Element::identity(n) + sigma(3, 1, n) * sigma(3, 2, n));
    s.record("Tr_3 by idempotents", max_abs_difference(partial_trace_idempotent(rho, 3), mixed), 0.0);
    s.record("Tr_3 by dropping", max_abs_difference(partial_trace_drop(rho, {3}), mixed), 0.0);
    s.record("pure state", max_abs_difference(rho * rho, rho));
    Rng rng(o.seed + 2);
    double agree = 0.0;
    for (int t = 0; t < o.trials; ++t) {
        Element h = random_hermitian(rng, n);
        int m = std::uniform_int_distribution<int>(1, n)(rng);
        agree = std::max(agree, max_abs_difference(partial_trace_idempotent(h, m), partial_trace_drop(h, {m})));
    }
    s.record("trace methods agree", agree, 1e-12);
    return s.take();
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = {"axioms", "oracle", "cnot-seq", "qft", "ghz"};
    return names;
}

std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options) {
    if (options.trials < 1) throw std::invalid_argument("trials must be positive");
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const auto& name : verify_suites()) {
            auto part = run_verify(name, options);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (suite == "axioms") return axioms(options);
    if (suite == "oracle") return oracle(options);
    if (suite == "cnot-seq") return cnot_seq(options);
    if (suite == "qft") return qft_suite(options);
    if (suite == "ghz") return ghz(options);
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

std::string verify_json(const std::vector<CheckResult>& results, const VerifyOptions& options) {
    using nlohmann::json;
    json checks = json::array();
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.passed;
        checks.push_back({{"suite", r.suite},
                          {"check", r.name},
                          {"residual", r.residual},
                          {"tolerance", r.tolerance},
                          {"passed", r.passed}});
    }
    return json{{"seed", options.seed}, {"trials", options.trials}, {"passed", ok}, {"checks", checks}}.dump(2);
}

MatrixRep framed_dft(int n) {
    check_particle_count(n);
    const Eigen::Index d = Eigen::Index{1} << n;
    auto reversed = [n](Eigen::Index x) {
        Eigen::Index r = 0;
        for (int b = 0; b < n; ++b)
            if ((x >> b) & 1) r |= Eigen::Index{1} << (n - 1 - b);
        return r;
    };
    DenseMatrix f(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index k = 0; k < d; ++k)
            f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(d)),
                                 -2.0 * std::numbers::pi * static_cast<double>(j * reversed(k) % d) /
                                     static_cast<double>(d));
    Element y = Element::identity(n);
    for (int m = 1; m <= n; ++m) y = y * sigma(2, m, n);
    MatrixRep frame = to_matrix(y);
    return frame * MatrixRep(n, f) * frame;
}

}  // namespace mga
