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

#include "qss/adversary.hpp"

#include <algorithm>
#include <string>

#include "qss/errors.hpp"

namespace qss {

std::string_view to_string(AttackKind kind) {
    switch (kind) {
        case AttackKind::NoAttack: return "none";
        case AttackKind::InterceptResend: return "intercept-resend";
        case AttackKind::CnotAncilla: return "cnot-ancilla";
    }
    return "?";
}

AttackKind parse_attack_kind(std::string_view name) {
    if (name == "none") return AttackKind::NoAttack;
    if (name == "intercept-resend") return AttackKind::InterceptResend;
    if (name == "cnot-ancilla") return AttackKind::CnotAncilla;
    throw ConfigError("unknown attack kind '" + std::string(name) + "'");
}

void InterceptScope::require(Qubit q, std::string_view operation) {
    if (!allows(q)) {
        throw ScopeViolation("adversary " + std::string(operation) + " on qubit " + std::string(to_string(q)) +
                             " outside {E, S1}");
    }
}

void EveHands::touch(Qubit q, std::string_view operation) {
    InterceptScope::require(q, operation);
    addressed_.push_back(q);
}

void EveHands::cnot(Qubit control, Qubit target) {
    touch(control, "CNOT");
    touch(target, "CNOT");
    joint_ = apply_cnot(std::move(joint_), control, target);
}

void EveHands::h(Qubit q) {
    touch(q, "Hadamard");
    joint_ = apply_h(std::move(joint_), q);
}

MeasurementRecord EveHands::measure(Qubit q, double draw) {
    touch(q, "measurement");
    MeasurementResult m = measure_z(std::move(joint_), q, draw);
    joint_ = std::move(m.state);
    return m.record;
}

TransitResult eve_on_transit(AttackKind kind, RoundIndex round, StateVector joint, EveRecord record, double draw,
                             const StageObserver &observe) {
    const auto notify = [&](std::string_view stage, const EveHands &hands) {
        if (observe) observe(stage, hands.state());
    };
    record.rounds_seen = std::max(record.rounds_seen, round.value());
    EveHands hands(std::move(joint));

    switch (kind) {
        case AttackKind::NoAttack:
            break;
        case AttackKind::InterceptResend: {
            const MeasurementRecord m = hands.measure(Qubit::S1, draw);
            record.intercepted[round.value()] = {m.outcome, m.probability};
            notify("after Eve measures S1", hands);
            break;
        }
        case AttackKind::CnotAncilla: {
            if (!hands.state().contains(Qubit::E)) throw ConfigError("CNOT-ancilla attack needs Eve's ancilla E");
            if (round.value() == 1) {
                hands.cnot(Qubit::S1, Qubit::E);
                notify("after C_{1e}", hands);
            } else if (round.parity() == Parity::Even) {
                hands.cnot(Qubit::E, Qubit::S1);
                notify("after C_{e1}", hands);
            } else {
                hands.cnot(Qubit::E, Qubit::S1);
                notify("after C_{e1}", hands);
                const MeasurementRecord m = hands.measure(Qubit::S1, draw);
                record.measured[round.value()] = {m.outcome, m.probability};
                notify("after Eve measures S1", hands);
                hands.cnot(Qubit::E, Qubit::S1);
                notify("after C_{e1} again", hands);
            }
            break;
        }
    }
    std::vector<Qubit> addressed = hands.addressed();
    return TransitResult{std::move(hands).release(), std::move(record), std::move(addressed)};
}

StateVector eve_end_round(AttackKind kind, StateVector joint) {
    if (kind != AttackKind::CnotAncilla) return joint;
    EveHands hands(std::move(joint));
    hands.h(Qubit::E);
    return std::move(hands).release();
}

EveRecord eve_postprocess(EveRecord record, const std::map<int, Bit> &announced) {
    record.inferred_offset.reset();
    record.inferred_bits.reset();
    record.candidates.clear();
    record.ambiguous = false;

    std::optional<Bit> offset;
    for (const auto &[index, value] : announced) {
        if (index < 1 || index > record.rounds_seen) {
            throw InferenceError("announced index " + std::to_string(index) + " has no protocol round");
        }
        if (index % 2 == 0) continue;
        Bit implied = value;
        if (index != 1) {
            auto it = record.measured.find(index);
            if (it == record.measured.end()) {
                throw InferenceError("announced odd index " + std::to_string(index) + " has no eavesdropping record");
            }
            implied = static_cast<Bit>(it->second.value ^ value);
        }
        if (offset && *offset != implied) {
            throw InferenceError("announced odd bits imply conflicting offsets");
        }
        offset = implied;
    }

    const auto sequence = [&](Bit off) {
        std::map<int, Bit> bits{{1, off}};
        for (const auto &[k, obs] : record.measured) bits[k] = static_cast<Bit>(obs.value ^ off);
        return bits;
    };
    if (offset) {
        record.inferred_offset = offset;
        record.inferred_bits = sequence(*offset);
    } else {
        record.ambiguous = true;
        record.candidates = {sequence(0), sequence(1)};
    }
    return record;
}

}  // namespace qss
