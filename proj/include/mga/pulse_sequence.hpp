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
#include <variant>
#include <vector>

#include "mga/element.hpp"
#include "mga/propagators.hpp"

namespace mga {

/// Particle `particle` must be in the `sign` idempotent state.
struct Condition {
    int particle;
    Sign sign;

    friend bool operator==(const Condition&, const Condition&) = default;
};

/// Nonselective rotation of every particle about the same axis.
struct HardPulse {
    AxisVector axis;
    double angle;

    friend bool operator==(const HardPulse&, const HardPulse&) = default;
};

/// Rotation of a single particle.
struct SoftPulse {
    int particle;
    AxisVector axis;
    double angle;

    friend bool operator==(const SoftPulse&, const SoftPulse&) = default;
};

/// Free evolution under the weak scalar coupling for a time t, with
/// angle = pi J t: exp(-iota angle sigma_3^p1 sigma_3^p2 / 2).
struct CouplingEvolution {
    int p1;
    int p2;
    double angle;

    friend bool operator==(const CouplingEvolution&, const CouplingEvolution&) = default;
};

/// exp(-iota angle a^target E_cond / 2), E_cond the product of the
/// condition idempotents.
struct ConditionalRotation {
    int target;
    AxisVector axis;
    double angle;
    std::vector<Condition> condition;

    friend bool operator==(const ConditionalRotation&, const ConditionalRotation&) = default;
};

/// exp(-iota angle E_cond).
struct PhaseShift {
    std::vector<Condition> condition;
    double angle;

    friend bool operator==(const PhaseShift&, const PhaseShift&) = default;
};

using PulseEvent = std::variant<HardPulse, SoftPulse, CouplingEvolution, ConditionalRotation, PhaseShift>;

std::string event_kind(const PulseEvent& e);

/// An ordered list of events; events.front() is applied first, so the
/// compiled propagator is U_last ... U_first.
class PulseSequence {
   public:
    explicit PulseSequence(int n, std::vector<PulseEvent> events = {});

    int n_particles() const { return n_; }
    const std::vector<PulseEvent>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }

    PulseSequence then(PulseEvent e) const;

    std::string to_json(int indent = -1) const;
    static PulseSequence from_json(const std::string& text);

    friend bool operator==(const PulseSequence&, const PulseSequence&) = default;

   private:
    int n_;
    std::vector<PulseEvent> events_;
};

/// Propagator of a single event.
Element event_propagator(const PulseEvent& e, int n);

/// Ordered product of the event propagators; the empty sequence gives 1.
Element compile_sequence(const PulseSequence& s);

}  // namespace mga
