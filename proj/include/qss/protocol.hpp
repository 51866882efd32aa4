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

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qss/quantum_core.hpp"
#include "qss/rng.hpp"

namespace qss {

/// Alice owns carrier qubit A and prepares S1/S2; Bob owns B and receives
/// S1; Charlie owns C and receives S2.
enum class Party { Alice, Bob, Charlie };

enum class Parity { Odd, Even };

std::string_view to_string(Parity p);

/// 1-based protocol round.
class RoundIndex {
  public:
    /// Throws ConfigError for k < 1.
    explicit RoundIndex(int k);

    int value() const { return k_; }
    Parity parity() const { return k_ % 2 == 1 ? Parity::Odd : Parity::Even; }

    friend bool operator==(RoundIndex, RoundIndex) = default;

  private:
    int k_;
};

/// Alice's data bits q_1..q_n, addressed 1-based.
class DataBits {
  public:
    /// Throws ConfigError if empty or any entry is not 0/1.
    explicit DataBits(std::vector<Bit> bits);
    /// Parses "0110..."; throws ConfigError on empty or non-binary input.
    static DataBits parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    Bit at(int k) const;
    const std::vector<Bit> &bits() const { return bits_; }
    std::string to_string() const;

  private:
    std::vector<Bit> bits_;
};

/// What Bob and Charlie obtain in a round.
struct Reception {
    Bit bob_outcome;
    Bit charlie_outcome;
    /// Odd rounds: Bob's outcome. Even rounds: Bob XOR Charlie.
    Bit reconstructed;
    /// Odd rounds: Bob and Charlie agree. Even rounds: always true.
    bool consistent;
};

struct RoundRecord {
    RoundIndex round;
    Bit sent;
    Bit bob_outcome;
    Bit charlie_outcome;
    Bit reconstructed;
    bool consistent;
};

struct DetectionReport {
    std::vector<int> compared_indices;  // sorted, 1-based
    int mismatches = 0;
    bool detected = false;
    bool any_odd_index_announced = false;
};

/// Carrier labels in register order: A, B, C and optionally Eve's E.
std::vector<Qubit> carrier_labels(bool with_adversary_ancilla);

/// (|000> + |111>)/sqrt2 over (A,B,C), tensored with |0>_E if requested.
StateVector init_carrier(bool with_adversary_ancilla);

/// Two-qubit Bell pair over (S1,S2): |0bar> = (|00>+|11>)/sqrt2,
/// |1bar> = (|01>+|10>)/sqrt2. X on either qubit maps one onto the other
/// with no sign change.
StateVector bell_pair(Bit q);

/// Odd rounds: |q,q>. Even rounds: bell_pair(q).
StateVector encode_pair(Bit q, Parity parity);

/// Odd rounds: C(A->S1) then C(A->S2). Even rounds: C(A->S1) only.
StateVector alice_entangle(StateVector joint, Parity parity);

/// C(B->S1).
StateVector bob_disentangle(StateVector joint);
/// C(C->S2).
StateVector charlie_disentangle(StateVector joint);

struct ReceiveResult {
    Reception reception;
    /// The joint state with S1 and S2 measured and removed.
    StateVector carrier;
    MeasurementRecord bob_measurement;
    MeasurementRecord charlie_measurement;
};

/// Bob measures S1 with draws[0], Charlie measures S2 with draws[1].
ReceiveResult receive_and_reconstruct(StateVector joint, Parity parity, std::array<double, 2> draws);

/// Hadamard on A, B, C, and on E too when `adversary_present`.
StateVector end_round_hadamards(StateVector joint, bool adversary_present);

/// Number of announced positions: ceil(fraction * n), at least 1.
int comparison_size(int n, double fraction);

/// `comparison_size(n, fraction)` distinct indices from 1..n drawn uniformly
/// without replacement, returned sorted.
std::vector<int> choose_comparison_indices(int n, double fraction, Rng &rng);

/// Public subsequence check. Index k mismatches when Bob/Charlie's
/// reconstruction differs from Alice's bit or the round was inconsistent.
/// Throws ConfigError if an index is outside 1..n or records do not cover n.
DetectionReport public_comparison(std::span<const RoundRecord> records, const DataBits &sent,
                                  std::span<const int> indices);

}  // namespace qss
