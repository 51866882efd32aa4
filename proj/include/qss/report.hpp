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

#include "json.hpp"
#include "qss/harness.hpp"

namespace qss {

/// Release string echoed in every machine-readable report.
inline constexpr const char *kVersion = QSS_VERSION;

nlohmann::json config_to_json(const ExperimentConfig &config);

/// {"version", "config", "report": {detection_rate, mean_eve_known_fraction,
/// ambiguous_rate, mismatch_histogram, trial_count}}. Histogram keys are
/// mismatch counts rendered as strings.
nlohmann::json report_to_json(const AggregateReport &report, const ExperimentConfig &config);

std::string report_to_pretty(const AggregateReport &report, const ExperimentConfig &config);

/// Header for one-row-per-trial CSV output.
std::string csv_header();
std::string csv_row(const TrialSummary &summary);

}  // namespace qss
