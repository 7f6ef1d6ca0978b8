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
 * Pure n-qubit states stored as dense amplitude vectors.
 *
 * Basis convention: qubit 1 is the most significant bit of the basis index,
 * so qubit k of basis state |i> is `(i >> (n - k)) & 1`. This matches the
 * left-to-right ket notation |q1 q2 ... qn>.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmeslab {

using Complex = std::complex<double>;

/// Hard cap on the register size; 2^16 amplitudes is the largest state we
/// ever allocate.
inline constexpr int kMaxQubits = 16;

/// Normalization tolerance for states built in memory.
inline constexpr double kNormTolerance = 1e-12;

/// Index-bit mask of qubit `k` (1-based) in an n-qubit register.
constexpr std::uint32_t qubit_bit(int n, int k) { return 1U << (n - k); }

class QState {
  public:
    /// Takes ownership of `amplitudes`. Throws std::invalid_argument if the
    /// length is not 2^n or if the vector is not normalized within
    /// kNormTolerance.
    QState(int n, std::vector<Complex> amplitudes);

    /// Normalizes `amplitudes` before construction. Throws on a zero vector.
    static QState from_unnormalized(int n, std::vector<Complex> amplitudes);

    [[nodiscard]] int num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amps_[i];
    }
    [[nodiscard]] double norm_squared() const noexcept;

    /// Bit of qubit `k` (1-based) in basis index `i`.
    [[nodiscard]] int qubit_value(std::size_t i, int k) const {
        return static_cast<int>((i >> (n_ - k)) & 1U);
    }

    friend bool operator==(const QState &, const QState &) = default;

  private:
    int n_;
    std::vector<Complex> amps_;
};

/// Throws std::invalid_argument unless 1 <= n <= kMaxQubits.
void check_qubit_count(int n);

/// |index> on n qubits.
QState make_basis_state(int n, std::size_t index);

/// (|0...0> + |1...1>)/sqrt(2), n >= 2.
QState make_ghz(int n);

/// Equal superposition of the n weight-one basis states, n >= 2.
QState make_w(int n);

/// The displayed eight-qubit candidate state, encoded term by term as printed.
struct PsiM8 {
    QState state;
    /// Euclidean norm of the printed amplitude vector (factor 1/8 included)
    /// before normalization.
    double raw_norm;
    /// Number of nonzero amplitudes in the printed expansion.
    std::size_t support_size;
};

PsiM8 make_psi_m8();

/// Haar-random pure state: 2^(n+1) standard normal variates as real and
/// imaginary parts, then normalized. Deterministic in (n, seed).
QState random_state(int n, std::uint64_t seed);

/// Componentwise complex conjugate in the computational basis.
QState conjugate(const QState &state);

/// Tensor product |a> (x) |b>; `a` occupies the leading qubits.
QState tensor(const QState &a, const QState &b);

/// Applies a 2x2 unitary (row-major u00, u01, u10, u11) to qubit `k`.
QState apply_single_qubit(const QState &state, int k,
                          const std::array<Complex, 4> &u);

/// Relabels qubits: qubit k of the input becomes qubit perm[k-1] of the
/// output. `perm` must be a permutation of 1..n.
QState permute_qubits(const QState &state, std::span<const int> perm);

} // namespace mmeslab
