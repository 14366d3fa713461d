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


#include "mga/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mga/expression.hpp"
#include "mga/format.hpp"
#include "mga/gates.hpp"
#include "mga/nmr.hpp"
#include "mga/states.hpp"
#include "mga/verify.hpp"

namespace mga {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::map<std::string, FormatMode> kEmitModes = {
    {"text", FormatMode::Text}, {"json", FormatMode::Json}, {"matrix", FormatMode::Matrix}};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct EvalArgs {
    int n = 1;
    std::string expr;
    std::string emit = "text";
};

struct GateArgs {
    std::string name;
    int n = 0;
    std::string variant = "phase";
    std::string form = "recursive";
    std::vector<int> indices;
    std::string emit = "text";
};

struct DiagArgs {
    double w1 = 0, w2 = 0, j = 0;
    bool intensities = false;
    std::string mode = "real";
    bool json = false;
};

struct PtraceArgs {
    std::string state;
    std::vector<int> over;
    bool restrict = false;
    std::string emit = "text";
};

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 100;
    bool json = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
    Element e = evaluate(a.expr, a.n);
    out << format_element(e, kEmitModes.at(a.emit)) << "\n";
    return kExitOk;
}

std::vector<int> indices_or(const std::vector<int>& given, std::vector<int> fallback, std::size_t want,
                            const std::string& gate) {
    if (given.empty()) return fallback;
    if (want != 0 && given.size() != want) {
        throw UsageError(gate + " takes " + std::to_string(want) + " indices");
    }
    return given;
}

int cmd_gate(const GateArgs& a, std::ostream& out) {
    std::optional<PulseSequence> pulses;
    Element u(1);
    if (a.name == "cnot") {
        int n = a.n ? a.n : 2;
        auto idx = indices_or(a.indices, {1, 2}, 2, "cnot");
        u = cnot(idx[0], idx[1], n, a.variant == "bare" ? CnotVariant::Bare : CnotVariant::PhaseCorrected);
        if (a.emit == "pulses") {
            if (n != 2 || idx != std::vector<int>{1, 2}) {
                throw UsageError("the controlled-NOT pulse sequence exists for --n 2 --indices 1,2 only");
            }
            pulses = cnot_pulse_sequence().sequence;
        }
    } else if (a.name == "toffoli") {
        int n = a.n ? a.n : 3;
        auto idx = indices_or(a.indices, {1, 2, 3}, 3, "toffoli");
        u = toffoli(idx[0], idx[1], idx[2], n);
    } else if (a.name == "fredkin") {
        int n = a.n ? a.n : 3;
        auto idx = indices_or(a.indices, {1, 2, 3}, 3, "fredkin");
        u = fredkin(idx[0], idx[1], idx[2], n);
    } else if (a.name == "hadamard") {
        int n = a.n ? a.n : 1;
        if (a.indices.empty()) {
            u = hadamard_all(n);
            if (a.emit == "pulses") pulses = hadamard_hard_pulses(n);
        } else {
            if (a.emit == "pulses") throw UsageError("hard pulses implement the Hadamard on every particle");
            u = Element::identity(n);
            for (int m : std::set<int>(a.indices.begin(), a.indices.end())) u = u * hadamard(m, n);
        }
    } else {
        int n = a.n ? a.n : 3;
        if (!a.indices.empty()) throw UsageError("qft takes no --indices");
        u = qft(n, a.form == "rearranged" ? QftForm::Rearranged : QftForm::Recursive);
    }

    if (a.emit == "pulses") {
        if (!pulses) throw UsageError("no pulse sequence for gate " + a.name);
        out << pulses->to_json(2) << "\n";
        return kExitOk;
    }
    out << format_element(u, kEmitModes.at(a.emit)) << (a.emit == "matrix" ? "" : "\n");
    return kExitOk;
}

const char* sign_text(Sign s) { return s == Sign::Plus ? "+" : "-"; }

int cmd_diag(const DiagArgs& a, std::ostream& out) {
    SpinSystem s = SpinSystem::two_spin(a.w1, a.w2, a.j);
    DiagonalizationResult r = diagonalize_two_spin(s, 1, 2);
    std::optional<TransitionTable> table;
    if (a.intensities) table = transition_intensities(r, a.mode == "complex" ? ScalarPartMode::Complex : ScalarPartMode::Real);

    if (a.json) {
        nlohmann::json j = {{"theta", r.theta},
                            {"phi", r.phi},
                            {"T", nlohmann::json::parse(format_element(r.T, FormatMode::Json))},
                            {"h_diag", nlohmann::json::parse(format_element(r.h_diag, FormatMode::Json))}};
        if (table) {
            nlohmann::json lines = nlohmann::json::array();
            for (const auto& l : table->lines) {
                lines.push_back({{"flipped", l.flipped}, {"spectator", sign_text(l.spectator)}, {"intensity", l.intensity}});
            }
            j["lines"] = lines;
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "theta  " << fmt(r.theta) << "\n";
    out << "phi    " << fmt(r.phi) << "\n";
    out << "T      " << format_element(r.T, FormatMode::Text) << "\n";
    out << "h_diag " << format_element(r.h_diag, FormatMode::Text) << "\n";
    if (table) {
        for (const auto& l : table->lines) {
            out << "line   flip " << l.flipped << ", other spin " << sign_text(l.spectator) << ": " << fmt(l.intensity)
                << "\n";
        }
    }
    return kExitOk;
}

Element load_state(const std::string& state) {
    if (state == "ghz") return ghz_state();
    std::ifstream in(state);
    if (!in) throw UsageError("cannot open state file '" + state + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return element_from_json(text);
}

int cmd_ptrace(const PtraceArgs& a, std::ostream& out) {
    Element rho = load_state(a.state);
    std::set<int> over(a.over.begin(), a.over.end());
    Element reduced = partial_trace_drop(rho, over);
    if (a.restrict) reduced = restrict_particles(reduced, over);
    out << format_element(reduced, kEmitModes.at(a.emit)) << (a.emit == "matrix" ? "" : "\n");
    return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    VerifyOptions o{a.seed, a.trials};
    auto results = run_verify(a.suite, o);
    bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    if (a.json) {
        out << verify_json(results, o) << "\n";
    } else {
        for (const auto& r : results) {
            char buf[256];
            std::snprintf(buf, sizeof buf, "%-4s %-9s %-45s residual=%.3e tol=%.1e\n", r.passed ? "ok" : "FAIL",
                          r.suite.c_str(), r.name.c_str(), r.residual, r.tolerance);
            out << buf;
        }
        out << (ok ? "all checks passed" : "verification FAILED") << "\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiparticle geometric algebra toolkit", "mga"};
    app.require_subcommand(1);

    auto emit_check = CLI::IsMember({"text", "json", "matrix"});

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate an expression and print the Element");
    eval->add_option("--n", ea.n, "Particle count")->check(CLI::Range(1, kMaxParticles));
    eval->add_option("expr", ea.expr, "Expression")->required();
    eval->add_option("--emit", ea.emit, "Output format")->check(emit_check);

    GateArgs ga;
    auto* gate = app.add_subcommand("gate", "Print a gate as an Element, matrix or pulse sequence");
    gate->add_option("name", ga.name, "Gate")->required()->check(CLI::IsMember({"cnot", "toffoli", "fredkin", "hadamard", "qft"}));
    gate->add_option("--n", ga.n, "Particle count")->check(CLI::Range(1, kMaxParticles));
    gate->add_option("--variant", ga.variant, "CNOT variant")->check(CLI::IsMember({"bare", "phase"}));
    gate->add_option("--form", ga.form, "QFT form")->check(CLI::IsMember({"recursive", "rearranged"}));
    gate->add_option("--indices", ga.indices, "Particle indices, target first")->delimiter(',');
    gate->add_option("--emit", ga.emit, "Output format")->check(CLI::IsMember({"text", "json", "matrix", "pulses"}));

    DiagArgs da;
    auto* diag = app.add_subcommand("diag", "Diagonalize a strongly coupled two-spin Hamiltonian");
    diag->add_option("--w1", da.w1, "Resonance frequency of spin 1 (rad/s)")->required();
    diag->add_option("--w2", da.w2, "Resonance frequency of spin 2 (rad/s)")->required();
    diag->add_option("--J", da.j, "Coupling constant (Hz)")->required();
    diag->add_flag("--intensities", da.intensities, "Print the four line intensities");
    diag->add_option("--mode", da.mode, "Scalar part used in the transition moment")->check(CLI::IsMember({"real", "complex"}));
    diag->add_flag("--json", da.json, "Machine-readable output");

    PtraceArgs pa;
    auto* ptrace = app.add_subcommand("ptrace", "Partial trace of a state");
    ptrace->add_option("--state", pa.state, "ghz or a JSON Element file")->required();
    ptrace->add_option("--over", pa.over, "Particles to trace out")->required()->delimiter(',');
    ptrace->add_flag("--restrict", pa.restrict, "Drop the traced particles from the result");
    ptrace->add_option("--emit", pa.emit, "Output format")->check(emit_check);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run seeded self-checks");
    std::vector<std::string> suites = verify_suites();
    suites.push_back("all");
    verify->add_option("suite", va.suite, "Suite")->required()->check(CLI::IsMember(suites));
    verify->add_option("--seed", va.seed, "Random seed");
    verify->add_option("--trials", va.trials, "Random trials per check")->check(CLI::PositiveNumber);
    verify->add_flag("--json", va.json, "Print a JSON summary");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(ea, out);
        if (*gate) return cmd_gate(ga, out);
        if (*diag) return cmd_diag(da, out);
        if (*ptrace) return cmd_ptrace(pa, out);
        return cmd_verify(va, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace mga
