// Copyright 2026 The qss Authors
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

#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "qss/protocol.hpp"
#include "qss/quantum_core.hpp"

namespace qss {

enum class AttackKind { NoAttack, InterceptResend, CnotAncilla };

/// "none", "intercept-resend", "cnot-ancilla".
std::string_view to_string(AttackKind kind);
/// Inverse of to_string. Throws ConfigError on unknown names.
AttackKind parse_attack_kind(std::string_view name);

struct EveObservation {
    Bit value;
    double probability;
};

struct EveRecord {
    /// CNOT-ancilla measurements r_k, keyed by round. Keys are odd and >= 3;
    /// round 1 entangles the ancilla without measuring, so r_1 never exists.
    std::map<int, EveObservation> measured;
    /// Intercept-resend measurement of S1 in every round.
    std::map<int, EveObservation> intercepted;
    int rounds_seen = 0;

    std::optional<Bit> inferred_offset;
    /// Present iff inferred_offset is. Keyed by odd round index.
    std::optional<std::map<int, Bit>> inferred_bits;
    /// Set when no odd index was announced; `candidates` then holds the two
    /// sequences {0, r_3, r_5, ...} and {1, r_3^1, r_5^1, ...}.
    bool ambiguous = false;
    std::vector<std::map<int, Bit>> candidates;
};

/// Eve may only touch her ancilla and the in-transit sending qubit S1.
struct InterceptScope {
    static bool allows(Qubit q) { return q == Qubit::E || q == Qubit::S1; }
    /// Throws ScopeViolation if `q` is out of scope.
    static void require(Qubit q, std::string_view operation);
};

/// Gate access for the adversary: every operation is checked against
/// InterceptScope and logged.
class EveHands {
  public:
    explicit EveHands(StateVector joint) : joint_(std::move(joint)) {}

    void cnot(Qubit control, Qubit target);
    void h(Qubit q);
    MeasurementRecord measure(Qubit q, double draw);

    const StateVector &state() const { return joint_; }
    StateVector release() && { return std::move(joint_); }
    const std::vector<Qubit> &addressed() const { return addressed_; }

  private:
    void touch(Qubit q, std::string_view operation);

    StateVector joint_;
    std::vector<Qubit> addressed_;
};

/// Called with a stage name and the joint state at each intermediate step
/// of an adversary action.
using StageObserver = std::function<void(std::string_view stage, const StateVector &state)>;

struct TransitResult {
    StateVector joint;
    EveRecord record;
    /// Every qubit the adversary addressed, in order.
    std::vector<Qubit> addressed;
};

/// Eve's action while S1 travels from Alice to Bob.
///
///   NoAttack        identity
///   InterceptResend measure S1 (using `draw`) and forward it
///   CnotAncilla     round 1:      C(S1->E)
///                   even rounds:  C(E->S1)
///                   odd rounds>1: C(E->S1), measure S1 into r_k, C(E->S1)
///
/// CnotAncilla requires E in the joint state (ConfigError otherwise).
TransitResult eve_on_transit(AttackKind kind, RoundIndex round, StateVector joint, EveRecord record, double draw,
                             const StageObserver &observe = {});

/// Hadamard on E for CnotAncilla, identity otherwise.
StateVector eve_end_round(AttackKind kind, StateVector joint);

/// Resolves the q_1 offset from publicly announced bits (index -> Alice's bit).
/// Throws InferenceError for an index Eve has no round for, or if two
/// announced odd indices imply different offsets.
EveRecord eve_postprocess(EveRecord record, const std::map<int, Bit> &announced);

}  // namespace qss
