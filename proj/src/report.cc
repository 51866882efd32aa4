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

#include "qss/report.hpp"

#include <cstdio>
#include <sstream>

namespace qss {

nlohmann::json config_to_json(const ExperimentConfig &config) {
    nlohmann::json j = {
        {"n_bits", config.n_bits},
        {"trials", config.trials},
        {"attack", std::string(to_string(config.attack))},
        {"compare_fraction", config.compare_fraction},
        {"compare_count", comparison_size(config.n_bits, config.compare_fraction)},
        {"master_seed", config.master_seed},
        {"bits_mode", config.bits_mode == BitsMode::Fixed ? "fixed" : "random"},
    };
    if (config.fixed_bits) j["fixed_bits"] = config.fixed_bits->to_string();
    return j;
}

nlohmann::json report_to_json(const AggregateReport &report, const ExperimentConfig &config) {
    nlohmann::json histogram = nlohmann::json::object();
    for (const auto &[mismatches, count] : report.mismatch_histogram) histogram[std::to_string(mismatches)] = count;
    return {
        {"version", kVersion},
        {"config", config_to_json(config)},
        {"report",
         {
             {"detection_rate", report.detection_rate},
             {"mean_eve_known_fraction", report.mean_eve_known_fraction},
             {"ambiguous_rate", report.ambiguous_rate},
             {"mismatch_histogram", histogram},
             {"trial_count", report.trial_count},
         }},
    };
}

std::string report_to_pretty(const AggregateReport &report, const ExperimentConfig &config) {
    std::ostringstream out;
    out << "qss " << kVersion << "\n"
        << "attack            " << to_string(config.attack) << "\n"
        << "bits per trial    " << config.n_bits << "\n"
        << "compared bits     " << comparison_size(config.n_bits, config.compare_fraction) << " (fraction "
        << config.compare_fraction << ")\n"
        << "master seed       " << config.master_seed << "\n"
        << "trials            " << report.trial_count << "\n"
        << "detection rate    " << report.detection_rate << "\n"
        << "eve known frac.   " << report.mean_eve_known_fraction << " (non-ambiguous trials)\n"
        << "ambiguous rate    " << report.ambiguous_rate << "\n"
        << "mismatches        ";
    bool first = true;
    for (const auto &[mismatches, count] : report.mismatch_histogram) {
        out << (first ? "" : ", ") << mismatches << ":" << count;
        first = false;
    }
    out << "\n";
    return out.str();
}

std::string csv_header() {
    return "trial,seed,detected,mismatches,ambiguous,eve_correct_bits,eve_known_fraction";
}

std::string csv_row(const TrialSummary &s) {
    char fraction[32];
    std::snprintf(fraction, sizeof fraction, "%.17g", s.eve_known_fraction);
    std::ostringstream out;
    out << s.index << ',' << s.seed << ',' << (s.detected ? 1 : 0) << ',' << s.mismatches << ','
        << (s.ambiguous ? 1 : 0) << ',' << s.eve_correct_bits << ',' << fraction;
    return out.str();
}

}  // namespace qss
