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

#include "qss/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qss/errors.hpp"
#include "qss/golden.hpp"
#include "qss/harness.hpp"
#include "qss/report.hpp"
#include "qss/state_io.hpp"

namespace qss::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

std::uint64_t parse_seed(const std::string &text) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(text, &used, 0);
    } catch (const std::exception &) {
        throw ConfigError("invalid seed '" + text + "'");
    }
    if (used != text.size() || text.starts_with('-')) throw ConfigError("invalid seed '" + text + "'");
    return value;
}

// --seed beats QSS_SEED beats the built-in default.
std::uint64_t resolve_seed(const std::string &flag) {
    if (!flag.empty()) return parse_seed(flag);
    if (const char *env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0') return parse_seed(env);
    return kDefaultSeed;
}

int cmd_verify(const std::string &format, bool inject_fault, std::ostream &out) {
    const auto checks = verify_golden_states(inject_fault ? GoldenFault::FlipEvenFormSign : GoldenFault::None);
    bool all = true;
    for (const auto &c : checks) all = all && c.passed;

    if (format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto &c : checks) {
            list.push_back({{"name", c.name}, {"q1", c.q1}, {"passed", c.passed}, {"max_error", c.max_error},
                            {"detail", c.detail}});
        }
        out << nlohmann::json{{"version", kVersion}, {"all_passed", all}, {"checks", list}}.dump(2) << "\n";
    } else if (format == "csv") {
        out << "name,q1,passed,max_error\n";
        for (const auto &c : checks) {
            out << c.name << ',' << int{c.q1} << ',' << (c.passed ? 1 : 0) << ',' << c.max_error << "\n";
        }
    } else {
        for (const auto &c : checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name << " q1=" << int{c.q1} << "  max error " << c.max_error;
            if (!c.detail.empty()) out << "  (" << c.detail << ")";
            out << "\n";
        }
        out << (all ? "all golden states reproduced\n" : "golden state verification FAILED\n");
    }
    return all ? kExitOk : kExitFailure;
}

nlohmann::json eve_to_json(const EveRecord &eve) {
    nlohmann::json measured = nlohmann::json::object();
    for (const auto &[k, obs] : eve.measured) {
        measured[std::to_string(k)] = {{"value", obs.value}, {"probability", obs.probability}};
    }
    nlohmann::json intercepted = nlohmann::json::object();
    for (const auto &[k, obs] : eve.intercepted) {
        intercepted[std::to_string(k)] = {{"value", obs.value}, {"probability", obs.probability}};
    }
    const auto bits_json = [](const std::map<int, Bit> &bits) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto &[k, b] : bits) j[std::to_string(k)] = b;
        return j;
    };
    nlohmann::json j = {{"measured", measured},
                        {"intercepted", intercepted},
                        {"ambiguous", eve.ambiguous},
                        {"inferred_offset", nullptr},
                        {"inferred_bits", nullptr},
                        {"candidates", nlohmann::json::array()}};
    if (eve.inferred_offset) j["inferred_offset"] = *eve.inferred_offset;
    if (eve.inferred_bits) j["inferred_bits"] = bits_json(*eve.inferred_bits);
    for (const auto &c : eve.candidates) j["candidates"].push_back(bits_json(c));
    return j;
}

int cmd_trace(const std::string &bits_text, const std::string &attack_name, std::uint64_t seed, double fraction,
              const std::string &format, std::ostream &out) {
    ExperimentConfig config;
    config.fixed_bits = DataBits::parse(bits_text);
    config.bits_mode = BitsMode::Fixed;
    config.n_bits = static_cast<int>(config.fixed_bits->size());
    config.attack = parse_attack_kind(attack_name);
    config.compare_fraction = fraction;
    config.master_seed = seed;
    config.trace = true;
    config.validate();
    const TrialResult result = run_trial(config, 0);
    const Transcript &t = result.transcript;

    if (format == "json") {
        nlohmann::json rounds = nlohmann::json::array();
        for (const RoundRecord &r : t.rounds) {
            nlohmann::json stages = nlohmann::json::array();
            for (const StageSnapshot &s : t.snapshots) {
                if (s.round == r.round.value()) stages.push_back({{"stage", s.stage}, {"state", to_json(s.state)}});
            }
            rounds.push_back({{"round", r.round.value()},
                              {"parity", std::string(to_string(r.round.parity()))},
                              {"sent", r.sent},
                              {"bob_outcome", r.bob_outcome},
                              {"charlie_outcome", r.charlie_outcome},
                              {"reconstructed", r.reconstructed},
                              {"consistent", r.consistent},
                              {"stages", stages}});
        }
        out << nlohmann::json{{"version", kVersion},
                              {"bits", t.sent.to_string()},
                              {"attack", std::string(to_string(config.attack))},
                              {"seed", seed},
                              {"label_order", "msb-first: the first label is the most significant bit"},
                              {"rounds", rounds},
                              {"detection",
                               {{"compared_indices", result.detection.compared_indices},
                                {"mismatches", result.detection.mismatches},
                                {"detected", result.detection.detected},
                                {"any_odd_index_announced", result.detection.any_odd_index_announced}}},
                              {"eve", eve_to_json(result.eve)}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }

    out << "# trace bits=" << t.sent.to_string() << " attack=" << to_string(config.attack) << " seed=" << seed
        << "\n# kets are written msb-first: the first listed label is the leftmost bit\n";
    for (const RoundRecord &r : t.rounds) {
        out << "round " << r.round.value() << " (" << to_string(r.round.parity()) << ") sends q=" << int{r.sent}
            << "\n";
        for (const StageSnapshot &s : t.snapshots) {
            if (s.round != r.round.value()) continue;
            out << "  " << s.stage << "\n    " << label_header(s.state) << "\n    " << format_ket(s.state) << "\n";
        }
        out << "  bob=" << int{r.bob_outcome} << " charlie=" << int{r.charlie_outcome}
            << " reconstructed=" << int{r.reconstructed} << (r.consistent ? " consistent" : " INCONSISTENT")
            << "\n";
    }
    out << "comparison indices:";
    for (int k : result.detection.compared_indices) out << ' ' << k;
    out << "\nmismatches " << result.detection.mismatches << (result.detection.detected ? " (DETECTED)" : "")
        << "\n";
    if (config.attack == AttackKind::CnotAncilla) {
        out << "eve records:";
        for (const auto &[k, obs] : result.eve.measured) out << " r_" << k << "=" << int{obs.value};
        out << "\n";
        if (result.eve.inferred_bits) {
            out << "eve offset " << int{*result.eve.inferred_offset} << ", inferred odd bits:";
            for (const auto &[k, b] : *result.eve.inferred_bits) out << " q_" << k << "=" << int{b};
            out << "\n";
        } else {
            out << "eve inference ambiguous (no odd index announced)\n";
        }
    }
    return kExitOk;
}

int cmd_run(const ExperimentConfig &config, const std::string &format, std::ostream &out) {
    config.validate();
    if (format == "csv") {
        out << csv_header() << "\n";
        run_experiment(config, [&](const TrialSummary &s) { out << csv_row(s) << "\n"; });
        return kExitOk;
    }
    const AggregateReport report = run_experiment(config);
    if (format == "json") {
        out << report_to_json(report, config).dump(2) << "\n";
    } else {
        out << report_to_pretty(report, config);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulator for the CNOT-ancilla attack on GHZ-carrier quantum secret sharing", "qss"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"json", "csv", "pretty"};

    std::string verify_format = "pretty";
    bool inject_fault = false;
    auto *verify = app.add_subcommand("verify", "Reproduce the reference attack states");
    verify->add_option("--format", verify_format, "Output format")->check(CLI::IsMember(formats));
    verify->add_flag("--inject-fault", inject_fault, "Test hook: corrupt one even-form sign")->group("");

    std::string trace_bits;
    std::string trace_attack = "cnot-ancilla";
    std::string trace_seed;
    double trace_fraction = 0.25;
    std::string trace_format = "pretty";
    auto *trace = app.add_subcommand("trace", "Dump per-stage states of a single run");
    trace->add_option("--bits", trace_bits, "Alice's data bits, e.g. 1011")->required();
    trace->add_option("--attack", trace_attack, "none | intercept-resend | cnot-ancilla");
    trace->add_option("--seed", trace_seed, "Master seed (default: $QSS_SEED, else 1)");
    trace->add_option("--compare-fraction", trace_fraction, "Fraction of bits compared publicly");
    trace->add_option("--format", trace_format, "Output format")->check(CLI::IsMember({"json", "pretty"}));

    ExperimentConfig run_config;
    std::string run_attack = "cnot-ancilla";
    std::string run_seed;
    std::string run_format = "pretty";
    auto *run_cmd = app.add_subcommand("run", "Monte Carlo experiment");
    run_cmd->add_option("--bits-count", run_config.n_bits, "Data bits per trial");
    run_cmd->add_option("--trials", run_config.trials, "Number of trials");
    run_cmd->add_option("--attack", run_attack, "none | intercept-resend | cnot-ancilla");
    run_cmd->add_option("--compare-fraction", run_config.compare_fraction, "Fraction of bits compared publicly");
    run_cmd->add_option("--seed", run_seed, "Master seed (default: $QSS_SEED, else 1)");
    run_cmd->add_option("--format", run_format, "Output format")->check(CLI::IsMember(formats));
    run_cmd->add_option("--threads", run_config.threads, "Worker threads (0 = all cores)");

    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(verify_format, inject_fault, out);
        if (*trace) {
            return cmd_trace(trace_bits, trace_attack, resolve_seed(trace_seed), trace_fraction, trace_format, out);
        }
        run_config.attack = parse_attack_kind(run_attack);
        run_config.master_seed = resolve_seed(run_seed);
        return cmd_run(run_config, run_format, out);
    } catch (const ConfigError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace qss::cli
