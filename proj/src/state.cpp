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
#include "mmeslab/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string_view>

#include "mmeslab/rng.hpp"

namespace mmeslab {

namespace {

double sum_norm_squared(std::span<const Complex> amps) {
    double acc = 0.0;
    for (const auto &a : amps) {
        acc += std::norm(a);
    }
    return acc;
}

std::vector<Complex> zeros(int n) {
    return std::vector<Complex>(std::size_t{1} << n, Complex{0.0, 0.0});
}

// One 4-qubit factor of the displayed state, written as "+abc.d" terms: a
// signed three-qubit ket followed by the fourth qubit.
std::vector<Complex> bracket(std::string_view terms) {
    std::vector<Complex> out(16, Complex{0.0, 0.0});
    std::size_t pos = 0;
    while (pos < terms.size()) {
        if (terms[pos] == ' ') {
            ++pos;
            continue;
        }
        const double sign = terms[pos] == '-' ? -1.0 : 1.0;
        std::size_t index = 0;
        for (const char c : terms.substr(pos + 1, 5)) {
            if (c == '.') {
                continue;
            }
            index = (index << 1U) | static_cast<std::size_t>(c == '1');
        }
        out[index] += sign;
        pos += 6;
    }
    return out;
}

} // namespace

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n));
    }
}

QState::QState(int n, std::vector<Complex> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
    check_qubit_count(n);
    if (amps_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument(
            "amplitude count " + std::to_string(amps_.size()) +
            " does not match 2^" + std::to_string(n));
    }
    const double dev = std::abs(sum_norm_squared(amps_) - 1.0);
    if (!(dev <= kNormTolerance)) {
        throw std::invalid_argument("state is not normalized (|norm^2 - 1| = " +
                                    std::to_string(dev) + ")");
    }
}

QState QState::from_unnormalized(int n, std::vector<Complex> amplitudes) {
    const double nrm = std::sqrt(sum_norm_squared(amplitudes));
    if (!(nrm > 0.0) || !std::isfinite(nrm)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    for (auto &a : amplitudes) {
        a /= nrm;
    }
    return QState(n, std::move(amplitudes));
}

double QState::norm_squared() const noexcept { return sum_norm_squared(amps_); }

QState make_basis_state(int n, std::size_t index) {
    check_qubit_count(n);
    if (index >= (std::size_t{1} << n)) {
        throw std::out_of_range("basis index " + std::to_string(index) +
                                " out of range for " + std::to_string(n) +
                                " qubits");
    }
    auto amps = zeros(n);
    amps[index] = 1.0;
    return QState(n, std::move(amps));
}

QState make_ghz(int n) {
    if (n < 2) {
        throw std::invalid_argument("GHZ state needs at least 2 qubits");
    }
    check_qubit_count(n);
    auto amps = zeros(n);
    amps.front() = M_SQRT1_2;
    amps.back() = M_SQRT1_2;
    return QState(n, std::move(amps));
}

QState make_w(int n) {
    if (n < 2) {
        throw std::invalid_argument("W state needs at least 2 qubits");
    }
    check_qubit_count(n);
    auto amps = zeros(n);
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 1; k <= n; ++k) {
        amps[qubit_bit(n, k)] = a;
    }
    return QState::from_unnormalized(n, std::move(amps));
}

PsiM8 make_psi_m8() {
    // Each line is a product of a bracket on qubits 1-4 and one on 5-8.
    // Terms are transcribed exactly as displayed, including the repeated
    // (|000> - |111>) in line 2 and the (|100> - |101>) in line 4.
    struct Line {
        std::string_view left;
        std::string_view right;
    };
    constexpr std::array<Line, 4> lines{{
        {"+000.0 +111.0 +010.1 +101.1", "+000.0 -111.0 +000.1 -111.1"},
        {"+001.0 +110.0 +000.1 -111.1", "+000.0 +111.0 +100.1 +011.1"},
        {"+010.0 +101.0 +100.1 +011.1", "+000.0 +111.0 -010.1 -101.1"},
        {"+000.0 -111.0 +010.1 -101.1", "+000.0 -111.0 +100.1 -101.1"},
    }};

    auto amps = zeros(8);
    for (const auto &line : lines) {
        const auto left = bracket(line.left);
        const auto right = bracket(line.right);
        for (std::size_t l = 0; l < 16; ++l) {
            for (std::size_t r = 0; r < 16; ++r) {
                amps[(l << 4U) | r] += left[l] * right[r];
            }
        }
    }
    for (auto &a : amps) {
        a /= 8.0;
    }
    const double raw_norm = std::sqrt(sum_norm_squared(amps));
    const auto support = static_cast<std::size_t>(std::count_if(
        amps.begin(), amps.end(), [](const Complex &a) { return a != 0.0; }));
    return PsiM8{QState::from_unnormalized(8, std::move(amps)), raw_norm,
                 support};
}

QState random_state(int n, Rng &rng) {
    check_qubit_count(n);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto amps = zeros(n);
    for (auto &a : amps) {
        const double re = normal(rng);
        const double im = normal(rng);
        a = Complex{re, im};
    }
    return QState::from_unnormalized(n, std::move(amps));
}

QState random_state(int n, std::uint64_t seed) {
    auto rng = make_rng(seed);
    return random_state(n, rng);
}

std::array<Complex, 4> random_unitary2(Rng &rng) {
    // Gram-Schmidt on a complex Ginibre matrix, with the phase fix that
    // makes the result Haar distributed.
    std::normal_distribution<double> normal(0.0, 1.0);
    std::array<Complex, 4> g{};
    for (auto &x : g) {
        const double re = normal(rng);
        const double im = normal(rng);
        x = Complex{re, im};
    }
    // Columns c0 = (g0, g2), c1 = (g1, g3).
    const double n0 = std::sqrt(std::norm(g[0]) + std::norm(g[2]));
    Complex q00 = g[0] / n0;
    Complex q10 = g[2] / n0;
    const Complex proj = std::conj(q00) * g[1] + std::conj(q10) * g[3];
    Complex q01 = g[1] - proj * q00;
    Complex q11 = g[3] - proj * q10;
    const double n1 = std::sqrt(std::norm(q01) + std::norm(q11));
    q01 /= n1;
    q11 /= n1;
    return {q00, q01, q10, q11};
}

QState random_product_state(int n, Rng &rng) {
    QState out = random_state(1, rng);
    for (int k = 2; k <= n; ++k) {
        out = tensor(out, random_state(1, rng));
    }
    return out;
}

QState random_local_unitary(const QState &state, Rng &rng) {
    QState out = state;
    for (int k = 1; k <= state.num_qubits(); ++k) {
        out = apply_single_qubit(out, k, random_unitary2(rng));
    }
    return out;
}

QState conjugate(const QState &state) {
    std::vector<Complex> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
    for (auto &a : amps) {
        a = std::conj(a);
    }
    return QState(state.num_qubits(), std::move(amps));
}

QState tensor(const QState &a, const QState &b) {
    const int n = a.num_qubits() + b.num_qubits();
    check_qubit_count(n);
    auto amps = zeros(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            amps[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return QState::from_unnormalized(n, std::move(amps));
}

QState apply_single_qubit(const QState &state, int k,
                          const std::array<Complex, 4> &u) {
    const int n = state.num_qubits();
    if (k < 1 || k > n) {
        throw std::out_of_range("qubit position out of range");
    }
    const std::size_t bit = qubit_bit(n, k);
    std::vector<Complex> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & bit) != 0U) {
            continue;
        }
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | bit];
        amps[i] = u[0] * a0 + u[1] * a1;
        amps[i | bit] = u[2] * a0 + u[3] * a1;
    }
    return QState::from_unnormalized(n, std::move(amps));
}

QState permute_qubits(const QState &state, std::span<const int> perm) {
    const int n = state.num_qubits();
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument("permutation length must equal qubit count");
    }
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const int p : perm) {
        if (p < 1 || p > n || seen[static_cast<std::size_t>(p)]++ != 0) {
            throw std::invalid_argument("not a permutation of 1..n");
        }
    }
    auto amps = zeros(n);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        std::size_t j = 0;
        for (int k = 1; k <= n; ++k) {
            if ((i & qubit_bit(n, k)) != 0U) {
                j |= qubit_bit(n, perm[static_cast<std::size_t>(k - 1)]);
            }
        }
        amps[j] = state[i];
    }
    return QState(n, std::move(amps));
}

} // namespace mmeslab
