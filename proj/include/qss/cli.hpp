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

#include <iosfwd>
#include <string>
#include <vector>

namespace qss::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted for the master seed when --seed is absent.
inline constexpr const char *kSeedEnvVar = "QSS_SEED";

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qss::cli
