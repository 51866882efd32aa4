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

#include "qss/golden.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "qss/adversary.hpp"
#include "qss/protocol.hpp"

namespace qss {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInv2Sqrt2 = 0.35355339059327376220;

const std::vector<Qubit> kCarrier = {Qubit::A, Qubit::B, Qubit::C, Qubit::E};
const std::vector<Qubit> kJoint = {Qubit::A, Qubit::B, Qubit::C, Qubit::E, Qubit::S1, Qubit::S2};

std::string bit(Bit b) { return b ? "1" : "0"; }
std::string flip(Bit b) { return b ? "0" : "1"; }

// Carrier at the start of round 2 for the given q1 (simulated).
struct Round1 {
    StateVector after_eve;
    StateVector carrier_odd;
    StateVector carrier_even;
};

Round1 simulate_round1(Bit q1) {
    const RoundIndex round(1);
    StateVector joint = alice_entangle(tensor(init_carrier(true), encode_pair(q1, Parity::Odd)), Parity::Odd);
    TransitResult transit = eve_on_transit(AttackKind::CnotAncilla, round, std::move(joint), EveRecord{}, 0.5);
    StateVector after_eve = transit.joint;
    ReceiveResult rx = receive_and_reconstruct(charlie_disentangle(bob_disentangle(std::move(transit.joint))),
                                               Parity::Odd, {0.5, 0.5});
    StateVector carrier_odd = rx.carrier;
    StateVector carrier_even = eve_end_round(AttackKind::CnotAncilla, end_round_hadamards(rx.carrier, false));
    return Round1{std::move(after_eve), std::move(carrier_odd), std::move(carrier_even)};
}

// Runs round 2 on the even-form carrier and returns the odd-form carrier
// that starts round 3.
StateVector simulate_round2(StateVector carrier, Bit q2) {
    const RoundIndex round(2);
    StateVector joint = alice_entangle(tensor(carrier, encode_pair(q2, Parity::Even)), Parity::Even);
    TransitResult transit = eve_on_transit(AttackKind::CnotAncilla, round, std::move(joint), EveRecord{}, 0.5);
    ReceiveResult rx = receive_and_reconstruct(charlie_disentangle(bob_disentangle(std::move(transit.joint))),
                                               Parity::Even, {0.25, 0.75});
    return eve_end_round(AttackKind::CnotAncilla, end_round_hadamards(std::move(rx.carrier), false));
}

GoldenCheck compare(std::string name, Bit q1, const StateVector &simulated, const StateVector &expected) {
    const double err = max_abs_difference(simulated, expected);
    const bool ok = err <= kExactTolerance;
    return GoldenCheck{std::move(name), q1, ok, err, ok ? "" : "max deviation " + std::to_string(err)};
}

void fold(GoldenCheck &acc, const GoldenCheck &sub, const std::string &label) {
    acc.max_error = std::max(acc.max_error, sub.max_error);
    if (!sub.passed) {
        acc.passed = false;
        if (!acc.detail.empty()) acc.detail += "; ";
        acc.detail += label + ": " + sub.detail;
    }
}

}  // namespace

StateVector fixture_round1_after_eve(Bit q1) {
    if (q1 == 0) return state_from_terms(kJoint, {{"000000", kInvSqrt2}, {"111111", kInvSqrt2}});
    return state_from_terms(kJoint, {{"000111", kInvSqrt2}, {"111000", kInvSqrt2}});
}

StateVector fixture_carrier_odd(Bit q1) {
    if (q1 == 0) return state_from_terms(kCarrier, {{"0000", kInvSqrt2}, {"1111", kInvSqrt2}});
    return state_from_terms(kCarrier, {{"0001", kInvSqrt2}, {"1110", kInvSqrt2}});
}

StateVector fixture_carrier_even(Bit q1) {
    const double h = kInv2Sqrt2;
    if (q1 == 0) {
        return state_from_terms(kCarrier, {{"0000", h}, {"0011", h}, {"0101", h}, {"0110", h},
                                           {"1001", h}, {"1010", h}, {"1100", h}, {"1111", h}});
    }
    return state_from_terms(kCarrier, {{"0000", h}, {"0011", -h}, {"0101", -h}, {"0110", h},
                                       {"1001", -h}, {"1010", h}, {"1100", h}, {"1111", -h}});
}

StateVector fixture_round3_entangled(Bit q1, Bit q) {
    const std::string same = bit(q) + bit(q);
    const std::string flipped = flip(q) + flip(q);
    if (q1 == 0) return state_from_terms(kJoint, {{"0000" + same, kInvSqrt2}, {"1111" + flipped, kInvSqrt2}});
    return state_from_terms(kJoint, {{"0001" + same, kInvSqrt2}, {"1110" + flipped, kInvSqrt2}});
}

StateVector fixture_round3_after_eve_cnot(Bit q1, Bit q) {
    // Written over (A,B,C,E,S2) x S1 and then put in register order.
    const std::vector<Qubit> split = {Qubit::A, Qubit::B, Qubit::C, Qubit::E, Qubit::S2};
    StateVector rest = q1 == 0
                           ? state_from_terms(split, {{"0000" + bit(q), kInvSqrt2}, {"1111" + flip(q), kInvSqrt2}})
                           : state_from_terms(split, {{"0001" + bit(q), kInvSqrt2}, {"1110" + flip(q), kInvSqrt2}});
    StateVector s1 = new_basis_state({Qubit::S1}, q1 == 0 ? bit(q) : flip(q));
    return reorder(tensor(rest, s1), kJoint);
}

std::vector<GoldenCheck> verify_golden_states(GoldenFault fault) {
    std::vector<GoldenCheck> checks;
    for (Bit q1 : {Bit{0}, Bit{1}}) {
        Round1 r1 = simulate_round1(q1);
        checks.push_back(compare("round1-after-eve-cnot", q1, r1.after_eve, fixture_round1_after_eve(q1)));
        checks.push_back(compare("carrier-odd-form", q1, r1.carrier_odd, fixture_carrier_odd(q1)));

        StateVector even = r1.carrier_even;
        if (fault == GoldenFault::FlipEvenFormSign && q1 == 1) {
            auto &amps = even.mutable_amplitudes();
            amps[basis_index("0011")] = -amps[basis_index("0011")];
        }
        checks.push_back(compare("carrier-even-form", q1, even, fixture_carrier_even(q1)));

        GoldenCheck entangled{"round3-entangled", q1, true, 0.0, ""};
        GoldenCheck after_cnot{"round3-after-eve-cnot", q1, true, 0.0, ""};
        for (Bit q2 : {Bit{0}, Bit{1}}) {
            const StateVector round3_carrier = simulate_round2(r1.carrier_even, q2);
            for (Bit q : {Bit{0}, Bit{1}}) {
                const std::string label = "q2=" + bit(q2) + " q=" + bit(q);
                StateVector joint =
                    alice_entangle(tensor(round3_carrier, encode_pair(q, Parity::Odd)), Parity::Odd);
                fold(entangled, compare("", q1, joint, fixture_round3_entangled(q1, q)), label);

                std::optional<StateVector> first_cnot;
                eve_on_transit(AttackKind::CnotAncilla, RoundIndex(3), std::move(joint), EveRecord{}, 0.5,
                               [&](std::string_view stage, const StateVector &s) {
                                   if (!first_cnot && stage == "after C_{e1}") first_cnot = s;
                               });
                if (!first_cnot) {
                    fold(after_cnot, GoldenCheck{"", q1, false, 0.0, "no C_{e1} stage observed"}, label);
                } else {
                    fold(after_cnot, compare("", q1, *first_cnot, fixture_round3_after_eve_cnot(q1, q)), label);
                }
            }
        }
        checks.push_back(std::move(entangled));
        checks.push_back(std::move(after_cnot));
    }
    // Group by scenario, q1 = 0 before q1 = 1.
    const std::vector<std::string> order = {"round1-after-eve-cnot", "carrier-odd-form", "carrier-even-form",
                                            "round3-entangled", "round3-after-eve-cnot"};
    const auto rank = [&](const GoldenCheck &c) {
        return std::find(order.begin(), order.end(), c.name) - order.begin();
    };
    std::stable_sort(checks.begin(), checks.end(), [&](const GoldenCheck &a, const GoldenCheck &b) {
        return std::pair(rank(a), a.q1) < std::pair(rank(b), b.q1);
    });
    return checks;
}

}  // namespace qss
