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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qss {

using Amplitude = std::complex<double>;
using Bit = std::uint8_t;

/// Tolerance for exact algebraic identities (gate involutions, golden states).
inline constexpr double kExactTolerance = 1e-12;
/// Tolerance for accumulated quantities (norms, probability tables).
inline constexpr double kNormTolerance = 1e-9;

/// Qubit roles: carrier qubits of Alice, Bob and Charlie, Eve's ancilla, and
/// the two sending qubits (S1 travels to Bob, S2 to Charlie).
enum class Qubit : std::uint8_t { A, B, C, E, S1, S2 };

std::string_view to_string(Qubit q);

/// Dense statevector over an ordered list of distinct qubit labels.
///
/// The first label is the most significant bit of the basis index, so a ket
/// such as |abce12> maps to the string "abce12" read left to right, and
/// new_basis_state({A,B,C,E,S1,S2}, "000111") sets index 0b000111.
class StateVector {
  public:
    /// Throws ConfigError unless labels are distinct, the amplitude count is
    /// 2^labels.size(), every amplitude is finite and the norm is 1 within
    /// kNormTolerance.
    StateVector(std::vector<Qubit> labels, std::vector<Amplitude> amplitudes);

    const std::vector<Qubit> &labels() const { return labels_; }
    std::size_t num_qubits() const { return labels_.size(); }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }

    bool contains(Qubit q) const;
    /// Shift of q's bit within a basis index. Throws ConfigError if absent.
    std::size_t shift_of(Qubit q) const;

    Amplitude amplitude(std::size_t index) const { return amplitudes_.at(index); }
    /// Amplitude of the basis ket written msb-first, e.g. "000111".
    Amplitude amplitude(std::string_view bits) const;

    double norm_squared() const;

    /// Raw mutable access for the gate kernels in this module.
    std::vector<Amplitude> &mutable_amplitudes() { return amplitudes_; }

  private:
    std::vector<Qubit> labels_;
    std::vector<Amplitude> amplitudes_;
};

/// Basis index of a bitstring under the msb-first convention.
std::size_t basis_index(std::string_view bits);
/// Inverse of basis_index for a register of `width` qubits.
std::string basis_string(std::size_t index, std::size_t width);

/// |bits> over `labels`. Throws ConfigError on length mismatch or non-binary
/// characters.
StateVector new_basis_state(std::vector<Qubit> labels, std::string_view bits);

/// Builds a state from (ket, coefficient) pairs. Used for hand-coded fixtures.
StateVector state_from_terms(std::vector<Qubit> labels,
                             const std::vector<std::pair<std::string, Amplitude>> &terms);

/// Tensor product; the result's labels are lhs.labels() followed by rhs.labels().
StateVector tensor(const StateVector &lhs, const StateVector &rhs);

/// Same state with its qubits listed in `order` (a permutation of the labels).
StateVector reorder(const StateVector &state, const std::vector<Qubit> &order);

StateVector apply_h(StateVector state, Qubit q);
StateVector apply_x(StateVector state, Qubit q);
StateVector apply_cnot(StateVector state, Qubit control, Qubit target);

struct MeasurementRecord {
    Qubit qubit;
    Bit outcome;
    /// Born probability of `outcome` at measurement time.
    double probability;
};

struct MeasurementResult {
    Bit outcome;
    StateVector state;
    MeasurementRecord record;
};

/// Z-basis measurement. Outcome is 0 iff draw < P(0); P(0) is snapped to 0
/// or 1 when within kExactTolerance of either.
MeasurementResult measure_z(StateVector state, Qubit q, double draw);

/// Removes q from a state in which it is known to hold `value` (for example
/// right after it was measured). Throws ConfigError if the other branch
/// carries weight above kNormTolerance.
StateVector drop_qubit(const StateVector &state, Qubit q, Bit value);

/// Largest componentwise |s1 - s2|. Throws ConfigError on label mismatch.
double max_abs_difference(const StateVector &s1, const StateVector &s2);

/// True iff s1 = lambda * s2 within tol for some unit complex lambda.
bool equal_up_to_global_phase(const StateVector &s1, const StateVector &s2, double tol);

/// Probability table over the bitstrings of a qubit subset.
struct MarginalTable {
    std::vector<Qubit> labels;
    /// Indexed msb-first over `labels`.
    std::vector<double> probabilities;

    double operator[](std::string_view bits) const;
    /// Entries with probability above `threshold`, keyed by bitstring.
    std::map<std::string, double> support(double threshold = kExactTolerance) const;
};

MarginalTable marginal_probabilities(const StateVector &state, const std::vector<Qubit> &subset);

/// Reduced density matrix of `subset` (partial trace over the other qubits).
struct DensityMatrix {
    std::vector<Qubit> labels;
    std::size_t dimension = 0;
    /// Row-major, dimension x dimension.
    std::vector<Amplitude> entries;

    Amplitude at(std::size_t row, std::size_t col) const { return entries.at(row * dimension + col); }
};

DensityMatrix reduced_density_matrix(const StateVector &state, const std::vector<Qubit> &subset);

double max_abs_difference(const DensityMatrix &lhs, const DensityMatrix &rhs);

}  // namespace qss
