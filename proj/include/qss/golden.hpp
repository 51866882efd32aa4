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

#include <string>
#include <vector>

#include "qss/quantum_core.hpp"

namespace qss {

// Hand-written reference states for the CNOT-ancilla attack. `q1` is Alice's
// first data bit, `q` the bit sent in the third round. Carrier states are over
// (A,B,C,E); joint states over (A,B,C,E,S1,S2).

/// Round 1 right after Eve's C(S1->E).
StateVector fixture_round1_after_eve(Bit q1);
/// Carrier plus ancilla at the end of an odd round (before the Hadamards).
StateVector fixture_carrier_odd(Bit q1);
/// Carrier plus ancilla after the four end-of-round Hadamards.
StateVector fixture_carrier_even(Bit q1);
/// Round 3 once Alice has entangled |q,q>.
StateVector fixture_round3_entangled(Bit q1, Bit q);
/// Round 3 after Eve's first C(E->S1): S1 holds q ^ q1 as a product factor.
StateVector fixture_round3_after_eve_cnot(Bit q1, Bit q);

enum class GoldenFault {
    None,
    /// Flips the sign of |0011> in the simulated q1=1 even-form carrier.
    FlipEvenFormSign,
};

struct GoldenCheck {
    /// Stable check name, e.g. "round1-after-eve-cnot".
    std::string name;
    Bit q1;
    bool passed;
    /// Largest componentwise deviation across the check's sub-cases.
    double max_error;
    std::string detail;
};

/// Simulates each reference scenario with the protocol and adversary code
/// and compares it against the fixtures above by strict componentwise
/// equality (tolerance kExactTolerance, no global-phase freedom).
/// Returns 10 checks: five scenarios times q1 in {0,1}; the round-3 checks
/// also sweep q and the round-2 bit over {0,1}.
std::vector<GoldenCheck> verify_golden_states(GoldenFault fault = GoldenFault::None);

}  // namespace qss
