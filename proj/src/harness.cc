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

#include "qss/harness.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "qss/errors.hpp"
#include "qss/rng.hpp"

namespace qss {

void ExperimentConfig::validate() const {
    if (n_bits < 1) throw ConfigError("bit count must be positive");
    if (trials < 1) throw ConfigError("trial count must be positive");
    comparison_size(n_bits, compare_fraction);
    if (bits_mode == BitsMode::Fixed) {
        if (!fixed_bits) throw ConfigError("fixed bit mode needs a bit sequence");
        if (fixed_bits->size() != static_cast<std::size_t>(n_bits)) {
            throw ConfigError("fixed bit sequence length differs from bit count");
        }
    }
}

std::uint64_t seed_for_trial(std::uint64_t master_seed, std::uint64_t trial_index) {
    return splitmix64(splitmix64(master_seed) + trial_index * 0x9E3779B97F4A7C15ULL);
}

TrialResult run_trial(const ExperimentConfig &config, std::uint64_t trial_index) {
    config.validate();
    const std::uint64_t seed = seed_for_trial(config.master_seed, trial_index);
    Rng rng(seed);
    const AttackKind attack = config.attack;
    const bool with_ancilla = attack == AttackKind::CnotAncilla;

    std::vector<Bit> bits;
    if (config.bits_mode == BitsMode::Fixed) {
        bits = config.fixed_bits->bits();
    } else {
        bits.reserve(static_cast<std::size_t>(config.n_bits));
        for (int i = 0; i < config.n_bits; ++i) bits.push_back(static_cast<Bit>(rng.bit()));
    }

    Transcript transcript{DataBits(std::move(bits)), {}, {}, init_carrier(with_ancilla)};
    const DataBits &sent = transcript.sent;
    EveRecord eve;
    StateVector carrier = transcript.final_carrier;

    for (int k = 1; k <= config.n_bits; ++k) {
        const RoundIndex round(k);
        const Parity parity = round.parity();
        const double eve_draw = rng.uniform();
        const double bob_draw = rng.uniform();
        const double charlie_draw = rng.uniform();
        const auto snap = [&](std::string_view stage, const StateVector &state) {
            if (config.trace) transcript.snapshots.push_back({k, std::string(stage), state});
        };

        StateVector joint = tensor(carrier, encode_pair(sent.at(k), parity));
        snap("carrier and fresh pair", joint);
        joint = alice_entangle(std::move(joint), parity);
        snap("after Alice entangles", joint);

        TransitResult transit = eve_on_transit(attack, round, std::move(joint), std::move(eve), eve_draw,
                                               config.trace ? StageObserver(snap) : StageObserver{});
        eve = std::move(transit.record);

        joint = charlie_disentangle(bob_disentangle(std::move(transit.joint)));
        snap("after disentangling", joint);

        ReceiveResult rx = receive_and_reconstruct(std::move(joint), parity, {bob_draw, charlie_draw});
        transcript.rounds.push_back(RoundRecord{round, sent.at(k), rx.reception.bob_outcome,
                                                rx.reception.charlie_outcome, rx.reception.reconstructed,
                                                rx.reception.consistent});
        snap("after measurement", rx.carrier);

        carrier = eve_end_round(attack, end_round_hadamards(std::move(rx.carrier), false));
        snap("after Hadamards", carrier);
    }
    transcript.final_carrier = carrier;

    const std::vector<int> indices = choose_comparison_indices(config.n_bits, config.compare_fraction, rng);
    DetectionReport detection = public_comparison(transcript.rounds, sent, indices);

    int correct = 0;
    if (attack == AttackKind::CnotAncilla) {
        std::map<int, Bit> announced;
        for (int k : indices) announced[k] = sent.at(k);
        eve = eve_postprocess(std::move(eve), announced);
        if (eve.inferred_bits) {
            for (const auto &[k, b] : *eve.inferred_bits) {
                if (sent.at(k) == b) ++correct;
            }
        }
    }
    const double fraction = static_cast<double>(correct) / config.n_bits;
    return TrialResult{seed, std::move(transcript), std::move(detection), std::move(eve), correct, fraction};
}

TrialSummary summarize(std::uint64_t index, const TrialResult &result) {
    return TrialSummary{index,
                        result.seed,
                        result.detection.detected,
                        result.detection.mismatches,
                        result.eve.ambiguous,
                        result.eve_correct_bits,
                        result.eve_known_fraction};
}

AggregateReport run_experiment(const ExperimentConfig &config,
                               const std::function<void(const TrialSummary &)> &sink) {
    config.validate();
    const std::uint64_t trials = config.trials;
    std::vector<TrialSummary> summaries(trials);

    unsigned workers = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

    // Each worker takes a strided slice; results land at their own index.
    std::vector<std::exception_ptr> errors(workers);
    const auto work = [&](unsigned w) {
        try {
            for (std::uint64_t i = w; i < trials; i += workers) summaries[i] = summarize(i, run_trial(config, i));
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto &t : pool) t.join();
    }
    for (const auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }

    AggregateReport report;
    report.trial_count = trials;
    std::uint64_t detected = 0, ambiguous = 0, committed = 0;
    double fraction_sum = 0.0;
    for (const TrialSummary &s : summaries) {
        if (sink) sink(s);
        detected += s.detected ? 1 : 0;
        ambiguous += s.ambiguous ? 1 : 0;
        if (!s.ambiguous) {
            ++committed;
            fraction_sum += s.eve_known_fraction;
        }
        ++report.mismatch_histogram[s.mismatches];
    }
    report.detection_rate = static_cast<double>(detected) / static_cast<double>(trials);
    report.ambiguous_rate = static_cast<double>(ambiguous) / static_cast<double>(trials);
    report.mean_eve_known_fraction = committed ? fraction_sum / static_cast<double>(committed) : 0.0;
    return report;
}

}  // namespace qss
