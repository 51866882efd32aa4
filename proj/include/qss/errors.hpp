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

#include <stdexcept>
#include <string>

namespace qss {

/// Malformed input: wrong lengths, unknown labels, invalid flag values.
class ConfigError : public std::invalid_argument {
  public:
    explicit ConfigError(const std::string &what) : std::invalid_argument(what) {}
};

/// An adversary operation addressed a qubit outside {E, S1}.
class ScopeViolation : public std::logic_error {
  public:
    explicit ScopeViolation(const std::string &what) : std::logic_error(what) {}
};

/// Eve's post-processing hit an impossible state (disagreeing offsets,
/// announcements without a matching record).
class InferenceError : public std::runtime_error {
  public:
    explicit InferenceError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace qss
