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

#include "json.hpp"
#include "qss/quantum_core.hpp"

namespace qss {

/// One nonzero basis component of a state dump.
struct BasisTerm {
    std::string bits;  // msb-first over the state's labels
    double re;
    double im;
};

/// Components with |amplitude| > threshold, in increasing basis order.
std::vector<BasisTerm> nonzero_terms(const StateVector &state, double threshold = kExactTolerance);

/// "labels (msb first): A B C E S1 S2"
std::string label_header(const StateVector &state);

/// Ket notation, e.g. "+0.707107|000111> +0.707107|111000>".
std::string format_ket(const StateVector &state, int precision = 6);

/// {"label_order": "msb-first", "labels": [...], "terms": [[bits, re, im], ...]}
nlohmann::json to_json(const StateVector &state);

}  // namespace qss
