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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qss/adversary.hpp"
#include "qss/protocol.hpp"
#include "qss/quantum_core.hpp"

namespace qss {

enum class BitsMode { Random, Fixed };

struct ExperimentConfig {
    int n_bits = 16;
    std::uint64_t trials = 1;
    AttackKind attack = AttackKind::NoAttack;
    double compare_fraction = 0.25;
    std::uint64_t master_seed = 1;
    /// Keep per-stage state snapshots in each transcript.
    bool trace = false;
    BitsMode bits_mode = BitsMode::Random;
    /// Used when bits_mode == Fixed; its length must equal n_bits.
    std::optional<DataBits> fixed_bits;
    /// Worker threads for run_experiment; 0 picks the hardware concurrency.
    unsigned threads = 0;

    /// Throws ConfigError on out-of-range values.
    void validate() const;
};

/// Trial seed: splitmix64(splitmix64(master) + trial_index * 0x9E3779B97F4A7C15).
/// For trial 0 this is a bijection of the master seed, so distinct masters
/// never share a trial-0 seed.
std::uint64_t seed_for_trial(std::uint64_t master_seed, std::uint64_t trial_index);

struct StageSnapshot {
    int round;
    std::string stage;
    StateVector state;
};

struct Transcript {
    DataBits sent;
    std::vector<RoundRecord> rounds;
    /// Filled only when the config asks for a trace.
    std::vector<StageSnapshot> snapshots;
    /// Carrier (plus ancilla, under the CNOT-ancilla attack) after the last round.
    StateVector final_carrier;
};

struct TrialResult {
    std::uint64_t seed;
    Transcript transcript;
    DetectionReport detection;
    EveRecord eve;
    /// Inferred bits that match Alice's. Zero when Eve has no committed
    /// inference (ambiguous, or an attack without an inference step).
    int eve_correct_bits = 0;
    /// eve_correct_bits / n_bits.
    double eve_known_fraction = 0.0;
};

/// Runs n_bits protocol rounds followed by the public comparison and Eve's
/// post-processing. Deterministic in (master_seed, trial_index).
///
/// Randomness is consumed in a fixed layout independent of the attack: the
/// data bits (random mode only), then three draws per round (Eve, Bob,
/// Charlie), then the comparison subset.
TrialResult run_trial(const ExperimentConfig &config, std::uint64_t trial_index);

/// Compact per-trial outcome used for aggregation and CSV output.
struct TrialSummary {
    std::uint64_t index;
    std::uint64_t seed;
    bool detected;
    int mismatches;
    bool ambiguous;
    int eve_correct_bits;
    double eve_known_fraction;
};

TrialSummary summarize(std::uint64_t index, const TrialResult &result);

struct AggregateReport {
    double detection_rate = 0.0;
    /// Mean eve_known_fraction over trials where Eve committed to an
    /// inference (non-ambiguous); 0 when there are none.
    double mean_eve_known_fraction = 0.0;
    double ambiguous_rate = 0.0;
    /// mismatch count -> number of trials
    std::map<int, std::uint64_t> mismatch_histogram;
    std::uint64_t trial_count = 0;

    friend bool operator==(const AggregateReport &, const AggregateReport &) = default;
};

/// Runs trials 0..trials-1 (possibly in parallel) and aggregates them in
/// index order. `sink`, if given, sees every summary in index order.
AggregateReport run_experiment(const ExperimentConfig &config,
                               const std::function<void(const TrialSummary &)> &sink = {});

}  // namespace qss
