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

#include "mga/pulse_sequence.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace mga {

namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void malformed(const std::string& why) {
    throw std::invalid_argument("malformed pulse event: " + why);
}

void check_index(int p, int n) {
    if (p < 1 || p > n) malformed("particle " + std::to_string(p) + " outside 1.." + std::to_string(n));
}

void check_angle(double a) {
    if (!std::isfinite(a)) malformed("non-finite angle");
}

void check_axis(const AxisVector& a) {
    if (std::abs(a.norm() - 1.0) > 1e-12) malformed("axis is not unit norm");
}

void check_condition(const std::vector<Condition>& cond, int n, int exclude = 0) {
    std::set<int> seen;
    for (const auto& c : cond) {
        check_index(c.particle, n);
        if (c.particle == exclude) malformed("condition on the rotated particle");
        if (!seen.insert(c.particle).second) malformed("repeated condition particle");
    }
}

void validate(const PulseEvent& e, int n) {
    std::visit(Overloaded{
                   [&](const HardPulse& p) {
                       check_axis(p.axis);
                       check_angle(p.angle);
                   },
                   [&](const SoftPulse& p) {
                       check_index(p.particle, n);
                       check_axis(p.axis);
                       check_angle(p.angle);
                   },
                   [&](const CouplingEvolution& p) {
                       check_index(p.p1, n);
                       check_index(p.p2, n);
                       if (p.p1 == p.p2) malformed("coupling of a particle with itself");
                       check_angle(p.angle);
                   },
                   [&](const ConditionalRotation& p) {
                       check_index(p.target, n);
                       check_axis(p.axis);
                       check_angle(p.angle);
                       check_condition(p.condition, n, p.target);
                   },
                   [&](const PhaseShift& p) {
                       check_angle(p.angle);
                       check_condition(p.condition, n);
                   },
               },
               e);
}

Element condition_idempotent(const std::vector<Condition>& cond, int n) {
    Element out = Element::identity(n);
    for (const auto& c : cond) out = out * idempotent_e(c.sign, c.particle, n);
    return out;
}

json axis_json(const AxisVector& a) { return json::array({a.x, a.y, a.z}); }

AxisVector axis_from(const json& j) {
    if (!j.is_array() || j.size() != 3) malformed("axis must be a 3-element array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json condition_json(const std::vector<Condition>& cond) {
    json out = json::array();
    for (const auto& c : cond) {
        out.push_back({{"particle", c.particle}, {"sign", c.sign == Sign::Plus ? "+" : "-"}});
    }
    return out;
}

std::vector<Condition> condition_from(const json& j) {
    if (!j.is_array()) malformed("condition must be an array");
    std::vector<Condition> out;
    for (const auto& c : j) {
        auto s = c.at("sign").get<std::string>();
        if (s != "+" && s != "-") malformed("condition sign must be \"+\" or \"-\"");
        out.push_back({c.at("particle").get<int>(), s == "+" ? Sign::Plus : Sign::Minus});
    }
    return out;
}

json event_json(const PulseEvent& e) {
    json j = std::visit(
        Overloaded{
            [](const HardPulse& p) -> json { return {{"axis", axis_json(p.axis)}, {"angle", p.angle}}; },
            [](const SoftPulse& p) -> json {
                return {{"particle", p.particle}, {"axis", axis_json(p.axis)}, {"angle", p.angle}};
            },
            [](const CouplingEvolution& p) -> json {
                return {{"p1", p.p1}, {"p2", p.p2}, {"angle", p.angle}};
            },
            [](const ConditionalRotation& p) -> json {
                return {{"target", p.target},
                        {"axis", axis_json(p.axis)},
                        {"angle", p.angle},
                        {"condition", condition_json(p.condition)}};
            },
            [](const PhaseShift& p) -> json {
                return {{"condition", condition_json(p.condition)}, {"angle", p.angle}};
            },
        },
        e);
    j["kind"] = event_kind(e);
    return j;
}

PulseEvent event_from(const json& j) {
    auto kind = j.at("kind").get<std::string>();
    if (kind == "hard_pulse") return HardPulse{axis_from(j.at("axis")), j.at("angle").get<double>()};
    if (kind == "soft_pulse") {
        return SoftPulse{j.at("particle").get<int>(), axis_from(j.at("axis")), j.at("angle").get<double>()};
    }
    if (kind == "coupling_evolution") {
        return CouplingEvolution{j.at("p1").get<int>(), j.at("p2").get<int>(), j.at("angle").get<double>()};
    }
    if (kind == "conditional_rotation") {
        return ConditionalRotation{j.at("target").get<int>(), axis_from(j.at("axis")),
                                   j.at("angle").get<double>(), condition_from(j.at("condition"))};
    }
    if (kind == "phase_shift") {
        return PhaseShift{condition_from(j.at("condition")), j.at("angle").get<double>()};
    }
    malformed("unknown kind \"" + kind + "\"");
}

}  // namespace

std::string event_kind(const PulseEvent& e) {
    return std::visit(Overloaded{
                          [](const HardPulse&) { return std::string("hard_pulse"); },
                          [](const SoftPulse&) { return std::string("soft_pulse"); },
                          [](const CouplingEvolution&) { return std::string("coupling_evolution"); },
                          [](const ConditionalRotation&) { return std::string("conditional_rotation"); },
                          [](const PhaseShift&) { return std::string("phase_shift"); },
                      },
                      e);
}

PulseSequence::PulseSequence(int n, std::vector<PulseEvent> events) : n_(n), events_(std::move(events)) {
    check_particle_count(n);
    for (const auto& e : events_) validate(e, n_);
}

PulseSequence PulseSequence::then(PulseEvent e) const {
    auto events = events_;
    events.push_back(std::move(e));
    return PulseSequence(n_, std::move(events));
}

std::string PulseSequence::to_json(int indent) const {
    json events = json::array();
    for (const auto& e : events_) events.push_back(event_json(e));
    json j = {{"n", n_}, {"events", events}};
    return j.dump(indent);
}

PulseSequence PulseSequence::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
        std::vector<PulseEvent> events;
        for (const auto& e : j.at("events")) events.push_back(event_from(e));
        return PulseSequence(j.at("n").get<int>(), std::move(events));
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("bad pulse sequence JSON: ") + ex.what());
    }
}

Element event_propagator(const PulseEvent& e, int n) {
    validate(e, n);
    return std::visit(
        Overloaded{
            [n](const HardPulse& p) {
                Element u = Element::identity(n);
                for (int m = 1; m <= n; ++m) u = u * rotor(p.axis, p.angle, m, n);
                return u;
            },
            [n](const SoftPulse& p) { return rotor(p.axis, p.angle, p.particle, n); },
            [n](const CouplingEvolution& p) {
                Element zz = sigma(3, p.p1, n) * sigma(3, p.p2, n);
                return Element::scalar(n, std::cos(p.angle / 2)) +
                       Complex(0.0, -std::sin(p.angle / 2)) * zz;
            },
            [n](const ConditionalRotation& p) {
                return conditionalize(rotor(p.axis, p.angle, p.target, n),
                                      condition_idempotent(p.condition, n));
            },
            [n](const PhaseShift& p) {
                return conditionalize(Element::scalar(n, std::exp(Complex(0.0, -p.angle))),
                                      condition_idempotent(p.condition, n));
            },
        },
        e);
}

Element compile_sequence(const PulseSequence& s) {
    Element u = Element::identity(s.n_particles());
    for (const auto& e : s.events()) u = event_propagator(e, s.n_particles()) * u;
    return u;
}

}  // namespace mga
