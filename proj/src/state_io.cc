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

#include "qss/state_io.hpp"

#include <cmath>
#include <cstdio>

namespace qss {

std::vector<BasisTerm> nonzero_terms(const StateVector &state, double threshold) {
    std::vector<BasisTerm> terms;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        const Amplitude a = state.amplitude(i);
        if (std::abs(a) > threshold) terms.push_back({basis_string(i, state.num_qubits()), a.real(), a.imag()});
    }
    return terms;
}

std::string label_header(const StateVector &state) {
    std::string out = "labels (msb first):";
    for (Qubit q : state.labels()) {
        out += ' ';
        out += to_string(q);
    }
    return out;
}

std::string format_ket(const StateVector &state, int precision) {
    std::string out;
    char buf[96];
    for (const BasisTerm &t : nonzero_terms(state)) {
        if (!out.empty()) out += ' ';
        const bool has_re = std::abs(t.re) > kExactTolerance;
        const bool has_im = std::abs(t.im) > kExactTolerance;
        if (has_re && has_im) {
            std::snprintf(buf, sizeof buf, "(%+.*f%+.*fi)", precision, t.re, precision, t.im);
        } else if (has_im) {
            std::snprintf(buf, sizeof buf, "%+.*fi", precision, t.im);
        } else {
            std::snprintf(buf, sizeof buf, "%+.*f", precision, t.re);
        }
        out += buf;
        out += '|' + t.bits + '>';
    }
    return out;
}

nlohmann::json to_json(const StateVector &state) {
    nlohmann::json labels = nlohmann::json::array();
    for (Qubit q : state.labels()) labels.push_back(std::string(to_string(q)));
    nlohmann::json terms = nlohmann::json::array();
    for (const BasisTerm &t : nonzero_terms(state)) terms.push_back({t.bits, t.re, t.im});
    return {{"label_order", "msb-first"}, {"labels", labels}, {"terms", terms}};
}

}  // namespace qss
