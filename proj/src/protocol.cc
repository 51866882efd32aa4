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

#include "qss/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qss/errors.hpp"

namespace qss {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

std::string_view to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

RoundIndex::RoundIndex(int k) : k_(k) {
    if (k < 1) throw ConfigError("round index must be >= 1, got " + std::to_string(k));
}

DataBits::DataBits(std::vector<Bit> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw ConfigError("data bit sequence must be nonempty");
    for (Bit b : bits_) {
        if (b > 1) throw ConfigError("data bits must be 0 or 1");
    }
}

DataBits DataBits::parse(std::string_view text) {
    std::vector<Bit> bits;
    for (char c : text) {
        if (c != '0' && c != '1') throw ConfigError("malformed bitstring '" + std::string(text) + "'");
        bits.push_back(static_cast<Bit>(c - '0'));
    }
    return DataBits(std::move(bits));
}

Bit DataBits::at(int k) const {
    if (k < 1 || static_cast<std::size_t>(k) > bits_.size()) {
        throw ConfigError("data bit index " + std::to_string(k) + " outside 1.." + std::to_string(bits_.size()));
    }
    return bits_[static_cast<std::size_t>(k - 1)];
}

std::string DataBits::to_string() const {
    std::string out;
    for (Bit b : bits_) out += static_cast<char>('0' + b);
    return out;
}

std::vector<Qubit> carrier_labels(bool with_adversary_ancilla) {
    if (with_adversary_ancilla) return {Qubit::A, Qubit::B, Qubit::C, Qubit::E};
    return {Qubit::A, Qubit::B, Qubit::C};
}

StateVector init_carrier(bool with_adversary_ancilla) {
    StateVector ghz = state_from_terms(carrier_labels(false), {{"000", kInvSqrt2}, {"111", kInvSqrt2}});
    if (!with_adversary_ancilla) return ghz;
    return tensor(ghz, new_basis_state({Qubit::E}, "0"));
}

StateVector bell_pair(Bit q) {
    if (q == 0) return state_from_terms({Qubit::S1, Qubit::S2}, {{"00", kInvSqrt2}, {"11", kInvSqrt2}});
    return state_from_terms({Qubit::S1, Qubit::S2}, {{"01", kInvSqrt2}, {"10", kInvSqrt2}});
}

StateVector encode_pair(Bit q, Parity parity) {
    if (q > 1) throw ConfigError("data bit must be 0 or 1");
    if (parity == Parity::Even) return bell_pair(q);
    return new_basis_state({Qubit::S1, Qubit::S2}, q == 0 ? "00" : "11");
}

StateVector alice_entangle(StateVector joint, Parity parity) {
    joint = apply_cnot(std::move(joint), Qubit::A, Qubit::S1);
    if (parity == Parity::Odd) joint = apply_cnot(std::move(joint), Qubit::A, Qubit::S2);
    return joint;
}

StateVector bob_disentangle(StateVector joint) { return apply_cnot(std::move(joint), Qubit::B, Qubit::S1); }

StateVector charlie_disentangle(StateVector joint) { return apply_cnot(std::move(joint), Qubit::C, Qubit::S2); }

ReceiveResult receive_and_reconstruct(StateVector joint, Parity parity, std::array<double, 2> draws) {
    MeasurementResult bob = measure_z(std::move(joint), Qubit::S1, draws[0]);
    MeasurementResult charlie = measure_z(std::move(bob.state), Qubit::S2, draws[1]);

    Reception r{};
    r.bob_outcome = bob.outcome;
    r.charlie_outcome = charlie.outcome;
    if (parity == Parity::Odd) {
        r.reconstructed = bob.outcome;
        r.consistent = bob.outcome == charlie.outcome;
    } else {
        r.reconstructed = static_cast<Bit>(bob.outcome ^ charlie.outcome);
        r.consistent = true;
    }
    StateVector carrier = drop_qubit(charlie.state, Qubit::S1, bob.outcome);
    carrier = drop_qubit(carrier, Qubit::S2, charlie.outcome);
    return ReceiveResult{r, std::move(carrier), bob.record, charlie.record};
}

StateVector end_round_hadamards(StateVector joint, bool adversary_present) {
    for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) joint = apply_h(std::move(joint), q);
    if (adversary_present) joint = apply_h(std::move(joint), Qubit::E);
    return joint;
}

int comparison_size(int n, double fraction) {
    if (n < 1) throw ConfigError("bit count must be positive");
    if (!(fraction > 0.0 && fraction <= 1.0)) throw ConfigError("compare fraction must lie in (0, 1]");
    // Slack absorbs products such as 0.1 * 30 = 3.0000000000000004.
    const int m = static_cast<int>(std::ceil(fraction * n - 1e-9));
    return std::clamp(m, 1, n);
}

std::vector<int> choose_comparison_indices(int n, double fraction, Rng &rng) {
    const int m = comparison_size(n, fraction);
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    // Partial Fisher-Yates: the first m slots become a uniform m-subset.
    for (int i = 0; i < m; ++i) {
        const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(m));
    std::sort(pool.begin(), pool.end());
    return pool;
}

DetectionReport public_comparison(std::span<const RoundRecord> records, const DataBits &sent,
                                  std::span<const int> indices) {
    const int n = static_cast<int>(sent.size());
    if (records.size() != sent.size()) throw ConfigError("round records do not cover every data bit");
    DetectionReport report;
    report.compared_indices.assign(indices.begin(), indices.end());
    std::sort(report.compared_indices.begin(), report.compared_indices.end());
    if (std::adjacent_find(report.compared_indices.begin(), report.compared_indices.end()) !=
        report.compared_indices.end()) {
        throw ConfigError("compared indices must be distinct");
    }
    for (int k : report.compared_indices) {
        if (k < 1 || k > n) throw ConfigError("compared index " + std::to_string(k) + " outside 1.." + std::to_string(n));
        const RoundRecord &rec = records[static_cast<std::size_t>(k - 1)];
        if (rec.reconstructed != sent.at(k) || !rec.consistent) ++report.mismatches;
        if (k % 2 == 1) report.any_odd_index_announced = true;
    }
    report.detected = report.mismatches > 0;
    return report;
}

}  // namespace qss
