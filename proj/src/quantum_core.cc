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

#include "qss/quantum_core.hpp"

#include <algorithm>
#include <cmath>

#include "qss/errors.hpp"

namespace qss {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::vector<std::size_t> positions_in(const StateVector &state, const std::vector<Qubit> &subset) {
    if (subset.empty()) throw ConfigError("qubit subset must be nonempty");
    std::vector<std::size_t> shifts;
    shifts.reserve(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (subset[i] == subset[j]) throw ConfigError("duplicate qubit in subset: " + std::string(to_string(subset[i])));
        }
        shifts.push_back(state.shift_of(subset[i]));
    }
    return shifts;
}

// Packs the bits of `index` at `shifts` into a subset index, msb-first.
std::size_t gather(std::size_t index, const std::vector<std::size_t> &shifts) {
    std::size_t out = 0;
    for (std::size_t s : shifts) out = (out << 1) | ((index >> s) & 1U);
    return out;
}

void require_same_labels(const std::vector<Qubit> &a, const std::vector<Qubit> &b) {
    if (a != b) throw ConfigError("states have different qubit layouts");
}

}  // namespace

std::string_view to_string(Qubit q) {
    switch (q) {
        case Qubit::A: return "A";
        case Qubit::B: return "B";
        case Qubit::C: return "C";
        case Qubit::E: return "E";
        case Qubit::S1: return "S1";
        case Qubit::S2: return "S2";
    }
    return "?";
}

StateVector::StateVector(std::vector<Qubit> labels, std::vector<Amplitude> amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (labels_[i] == labels_[j]) {
                throw ConfigError("qubit label appears twice: " + std::string(to_string(labels_[i])));
            }
        }
    }
    if (amplitudes_.size() != (std::size_t{1} << labels_.size())) {
        throw ConfigError("amplitude count " + std::to_string(amplitudes_.size()) + " does not match " +
                          std::to_string(labels_.size()) + " qubits");
    }
    for (const Amplitude &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw ConfigError("non-finite amplitude");
    }
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
        throw ConfigError("state is not normalized (norm^2 = " + std::to_string(norm_squared()) + ")");
    }
}

bool StateVector::contains(Qubit q) const {
    return std::find(labels_.begin(), labels_.end(), q) != labels_.end();
}

std::size_t StateVector::shift_of(Qubit q) const {
    auto it = std::find(labels_.begin(), labels_.end(), q);
    if (it == labels_.end()) throw ConfigError("qubit " + std::string(to_string(q)) + " is not in this state");
    return labels_.size() - 1 - static_cast<std::size_t>(it - labels_.begin());
}

Amplitude StateVector::amplitude(std::string_view bits) const {
    if (bits.size() != labels_.size()) throw ConfigError("ket width does not match state");
    return amplitudes_.at(basis_index(bits));
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Amplitude &a : amplitudes_) total += std::norm(a);
    return total;
}

std::size_t basis_index(std::string_view bits) {
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw ConfigError("bitstring contains '" + std::string(1, c) + "'");
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    return index;
}

std::string basis_string(std::size_t index, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if ((index >> (width - 1 - i)) & 1U) out[i] = '1';
    }
    return out;
}

StateVector new_basis_state(std::vector<Qubit> labels, std::string_view bits) {
    if (bits.size() != labels.size()) {
        throw ConfigError("bitstring length " + std::to_string(bits.size()) + " does not match " +
                          std::to_string(labels.size()) + " labels");
    }
    std::vector<Amplitude> amps(std::size_t{1} << labels.size());
    amps[basis_index(bits)] = 1.0;
    return StateVector(std::move(labels), std::move(amps));
}

StateVector state_from_terms(std::vector<Qubit> labels,
                             const std::vector<std::pair<std::string, Amplitude>> &terms) {
    std::vector<Amplitude> amps(std::size_t{1} << labels.size());
    for (const auto &[ket, coeff] : terms) {
        if (ket.size() != labels.size()) throw ConfigError("ket '" + ket + "' has the wrong width");
        amps[basis_index(ket)] += coeff;
    }
    return StateVector(std::move(labels), std::move(amps));
}

StateVector tensor(const StateVector &lhs, const StateVector &rhs) {
    std::vector<Qubit> labels = lhs.labels();
    labels.insert(labels.end(), rhs.labels().begin(), rhs.labels().end());
    std::vector<Amplitude> amps;
    amps.reserve(lhs.dimension() * rhs.dimension());
    for (const Amplitude &a : lhs.amplitudes()) {
        for (const Amplitude &b : rhs.amplitudes()) amps.push_back(a * b);
    }
    return StateVector(std::move(labels), std::move(amps));
}

StateVector reorder(const StateVector &state, const std::vector<Qubit> &order) {
    if (order.size() != state.num_qubits()) throw ConfigError("reorder needs a permutation of the labels");
    const std::vector<std::size_t> shifts = positions_in(state, order);
    std::vector<Amplitude> amps(state.dimension());
    for (std::size_t i = 0; i < state.dimension(); ++i) amps[gather(i, shifts)] = state.amplitude(i);
    return StateVector(order, std::move(amps));
}

StateVector apply_h(StateVector state, Qubit q) {
    const std::size_t mask = std::size_t{1} << state.shift_of(q);
    auto &amps = state.mutable_amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) continue;
        const Amplitude lo = amps[i];
        const Amplitude hi = amps[i | mask];
        amps[i] = (lo + hi) * kInvSqrt2;
        amps[i | mask] = (lo - hi) * kInvSqrt2;
    }
    return state;
}

StateVector apply_x(StateVector state, Qubit q) {
    const std::size_t mask = std::size_t{1} << state.shift_of(q);
    auto &amps = state.mutable_amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (!(i & mask)) std::swap(amps[i], amps[i | mask]);
    }
    return state;
}

StateVector apply_cnot(StateVector state, Qubit control, Qubit target) {
    if (control == target) throw ConfigError("CNOT control and target must differ");
    const std::size_t cmask = std::size_t{1} << state.shift_of(control);
    const std::size_t tmask = std::size_t{1} << state.shift_of(target);
    auto &amps = state.mutable_amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
    }
    return state;
}

MeasurementResult measure_z(StateVector state, Qubit q, double draw) {
    const std::size_t mask = std::size_t{1} << state.shift_of(q);
    auto &amps = state.mutable_amplitudes();
    double p0 = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (!(i & mask)) p0 += std::norm(amps[i]);
    }
    p0 = std::clamp(p0, 0.0, 1.0);
    if (p0 < kExactTolerance) p0 = 0.0;
    if (p0 > 1.0 - kExactTolerance) p0 = 1.0;

    const Bit outcome = draw < p0 ? 0 : 1;
    const double p = outcome == 0 ? p0 : 1.0 - p0;
    const double scale = 1.0 / std::sqrt(p);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const bool bit = (i & mask) != 0;
        amps[i] = bit == (outcome == 1) ? amps[i] * scale : Amplitude{};
    }
    MeasurementRecord record{q, outcome, p};
    return MeasurementResult{outcome, std::move(state), record};
}

StateVector drop_qubit(const StateVector &state, Qubit q, Bit value) {
    const std::size_t shift = state.shift_of(q);
    const std::size_t low_mask = (std::size_t{1} << shift) - 1;
    std::vector<Qubit> labels;
    for (Qubit l : state.labels()) {
        if (l != q) labels.push_back(l);
    }
    std::vector<Amplitude> amps(state.dimension() / 2);
    double discarded = 0.0;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        const Bit bit = static_cast<Bit>((i >> shift) & 1U);
        if (bit == value) {
            amps[((i >> (shift + 1)) << shift) | (i & low_mask)] = state.amplitude(i);
        } else {
            discarded += std::norm(state.amplitude(i));
        }
    }
    if (discarded > kNormTolerance) {
        throw ConfigError("qubit " + std::string(to_string(q)) + " is not in a definite |" +
                          std::to_string(value) + "> state");
    }
    double kept = 0.0;
    for (const Amplitude &a : amps) kept += std::norm(a);
    const double scale = 1.0 / std::sqrt(kept);
    for (Amplitude &a : amps) a *= scale;
    return StateVector(std::move(labels), std::move(amps));
}

double max_abs_difference(const StateVector &s1, const StateVector &s2) {
    require_same_labels(s1.labels(), s2.labels());
    double worst = 0.0;
    for (std::size_t i = 0; i < s1.dimension(); ++i) {
        worst = std::max(worst, std::abs(s1.amplitude(i) - s2.amplitude(i)));
    }
    return worst;
}

bool equal_up_to_global_phase(const StateVector &s1, const StateVector &s2, double tol) {
    require_same_labels(s1.labels(), s2.labels());
    // Estimate the phase from s2's largest component.
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < s2.dimension(); ++i) {
        if (std::abs(s2.amplitude(i)) > std::abs(s2.amplitude(pivot))) pivot = i;
    }
    const Amplitude ratio = s1.amplitude(pivot) / s2.amplitude(pivot);
    if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) return false;
    if (std::abs(std::abs(ratio) - 1.0) > tol) return false;
    const Amplitude phase = ratio / std::abs(ratio);
    for (std::size_t i = 0; i < s1.dimension(); ++i) {
        if (std::abs(s1.amplitude(i) - phase * s2.amplitude(i)) > tol) return false;
    }
    return true;
}

double MarginalTable::operator[](std::string_view bits) const {
    if (bits.size() != labels.size()) throw ConfigError("bitstring width does not match marginal");
    return probabilities.at(basis_index(bits));
}

std::map<std::string, double> MarginalTable::support(double threshold) const {
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] > threshold) out.emplace(basis_string(i, labels.size()), probabilities[i]);
    }
    return out;
}

MarginalTable marginal_probabilities(const StateVector &state, const std::vector<Qubit> &subset) {
    const std::vector<std::size_t> shifts = positions_in(state, subset);
    MarginalTable table{subset, std::vector<double>(std::size_t{1} << subset.size(), 0.0)};
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        table.probabilities[gather(i, shifts)] += std::norm(state.amplitude(i));
    }
    return table;
}

DensityMatrix reduced_density_matrix(const StateVector &state, const std::vector<Qubit> &subset) {
    const std::vector<std::size_t> kept = positions_in(state, subset);
    std::vector<Qubit> rest_labels;
    for (Qubit l : state.labels()) {
        if (std::find(subset.begin(), subset.end(), l) == subset.end()) rest_labels.push_back(l);
    }
    std::vector<std::size_t> traced;
    for (Qubit l : rest_labels) traced.push_back(state.shift_of(l));

    const std::size_t dim = std::size_t{1} << subset.size();
    const std::size_t env = std::size_t{1} << traced.size();
    // psi[row][env] laid out so the partial trace is a plain matrix product.
    std::vector<Amplitude> split(dim * env);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        split[gather(i, kept) * env + gather(i, traced)] = state.amplitude(i);
    }
    DensityMatrix rho{subset, dim, std::vector<Amplitude>(dim * dim)};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Amplitude sum{};
            for (std::size_t k = 0; k < env; ++k) sum += split[r * env + k] * std::conj(split[c * env + k]);
            rho.entries[r * dim + c] = sum;
        }
    }
    return rho;
}

double max_abs_difference(const DensityMatrix &lhs, const DensityMatrix &rhs) {
    require_same_labels(lhs.labels, rhs.labels);
    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.entries.size(); ++i) {
        worst = std::max(worst, std::abs(lhs.entries[i] - rhs.entries[i]));
    }
    return worst;
}

}  // namespace qss
