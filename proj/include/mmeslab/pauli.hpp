// Copyright 2026 The mmeslab Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Pauli-string expectation values, the correlation invariants
 * F_S = sum over the 3^|S| x/y/z letterings of S of <P>^2, their weight sums
 * M_k = sum_{|S|=k} F_S, and the n-tangle |<psi| Y^(x)n |psi*>|^2.
 *
 * Strings act on amplitudes through two index-bit masks: the flip mask
 * (letters x and y) and the phase mask (letters y and z). No dense operator
 * is ever formed.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmeslab/qubit_set.hpp"
#include "mmeslab/state.hpp"

namespace mmeslab {

enum class Pauli : std::uint8_t { X = 0, Y = 1, Z = 2 };

/// Imaginary part allowed on a Hermitian expectation before it is treated as
/// a kernel bug.
inline constexpr double kImagTolerance = 1e-10;

class PauliString {
  public:
    PauliString(int n, const std::vector<std::pair<int, Pauli>> &letters);

    /// Full-length form, one character per qubit from {I, X, Y, Z}
    /// (case-insensitive), qubit 1 first: "XIZY".
    static PauliString parse(std::string_view text);

    [[nodiscard]] int num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::uint32_t flip_mask() const noexcept { return flip_; }
    [[nodiscard]] std::uint32_t phase_mask() const noexcept { return phase_; }
    [[nodiscard]] int num_y() const noexcept;
    [[nodiscard]] int weight() const noexcept;
    [[nodiscard]] QubitSet support() const;
    [[nodiscard]] std::optional<Pauli> letter(int k) const;
    [[nodiscard]] std::string to_string() const;

  private:
    int n_;
    std::uint32_t flip_ = 0;
    std::uint32_t phase_ = 0;
};

/// <psi|P|psi>. Throws std::invalid_argument on a qubit-count mismatch and
/// std::runtime_error if the imaginary residue exceeds kImagTolerance.
double expectation(const QState &state, const PauliString &p);

/// All 3^|S| expectation values supported exactly on `subset`, in
/// lexicographic letter order (x < y < z) with the lowest position as the
/// most significant digit. One pass over the state per flip pattern.
std::vector<double> correlation_block(const QState &state, const QubitSet &subset);

/// F_S. Throws std::invalid_argument for an empty subset.
double f_invariant(const QState &state, const QubitSet &subset);

enum class SumStrategy {
    /// Direct sum of F_S over every subset.
    Enumeration,
    /// Subset purities G_m = sum_{|A|=m} 2^m pi_A, inverted through
    /// G_m = sum_{k<=m} C(n-k, m-k) M_k with M_0 = 1.
    Moebius,
};

struct WeightSums {
    int n = 0;
    /// m[k-1] = M_k.
    std::vector<double> m;

    [[nodiscard]] int k_max() const noexcept { return static_cast<int>(m.size()); }
    [[nodiscard]] double at(int k) const { return m.at(static_cast<std::size_t>(k - 1)); }
};

WeightSums weight_sums(const QState &state, int k_max,
                       SumStrategy strategy = SumStrategy::Enumeration);

/// Requires even n; odd registers are rejected with std::invalid_argument.
double n_tangle(const QState &state);

} // namespace mmeslab
