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
#include "mmeslab/pauli.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "mmeslab/purity.hpp"

namespace mmeslab {

namespace {

// i^k for k mod 4.
Complex i_pow(int k) {
    switch (k & 3) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

double checked_real(Complex v) {
    if (std::abs(v.imag()) > kImagTolerance) {
        throw std::runtime_error("Pauli expectation has imaginary residue " +
                                 std::to_string(v.imag()));
    }
    return v.real();
}

void walsh_hadamard(std::vector<Complex> &x) {
    for (std::size_t len = 1; len < x.size(); len <<= 1U) {
        for (std::size_t i = 0; i < x.size(); i += 2 * len) {
            for (std::size_t j = i; j < i + len; ++j) {
                const Complex a = x[j];
                const Complex b = x[j + len];
                x[j] = a + b;
                x[j + len] = a - b;
            }
        }
    }
}

} // namespace

PauliString::PauliString(int n, const std::vector<std::pair<int, Pauli>> &letters)
    : n_(n) {
    check_qubit_count(n);
    std::uint32_t seen = 0;
    for (const auto &[k, letter] : letters) {
        if (k < 1 || k > n) {
            throw std::out_of_range("Pauli position " + std::to_string(k) +
                                    " outside 1.." + std::to_string(n));
        }
        const auto bit = qubit_bit(n, k);
        if ((seen & bit) != 0U) {
            throw std::invalid_argument("repeated Pauli position " + std::to_string(k));
        }
        seen |= bit;
        if (letter != Pauli::Z) {
            flip_ |= bit;
        }
        if (letter != Pauli::X) {
            phase_ |= bit;
        }
    }
}

PauliString PauliString::parse(std::string_view text) {
    const int n = static_cast<int>(text.size());
    std::vector<std::pair<int, Pauli>> letters;
    for (int k = 1; k <= n; ++k) {
        switch (std::toupper(static_cast<unsigned char>(text[static_cast<std::size_t>(k - 1)]))) {
        case 'I':
            break;
        case 'X':
            letters.emplace_back(k, Pauli::X);
            break;
        case 'Y':
            letters.emplace_back(k, Pauli::Y);
            break;
        case 'Z':
            letters.emplace_back(k, Pauli::Z);
            break;
        default:
            throw std::invalid_argument("invalid Pauli letter in '" + std::string(text) + "'");
        }
    }
    return PauliString(n, letters);
}

int PauliString::num_y() const noexcept { return std::popcount(flip_ & phase_); }
int PauliString::weight() const noexcept { return std::popcount(flip_ | phase_); }
QubitSet PauliString::support() const { return QubitSet::from_mask(n_, flip_ | phase_); }

std::optional<Pauli> PauliString::letter(int k) const {
    if (k < 1 || k > n_) {
        throw std::out_of_range("Pauli position out of range");
    }
    const auto bit = qubit_bit(n_, k);
    const bool f = (flip_ & bit) != 0U;
    const bool p = (phase_ & bit) != 0U;
    if (f && p) {
        return Pauli::Y;
    }
    if (f) {
        return Pauli::X;
    }
    if (p) {
        return Pauli::Z;
    }
    return std::nullopt;
}

std::string PauliString::to_string() const {
    std::string out;
    for (int k = 1; k <= n_; ++k) {
        const auto l = letter(k);
        out += !l ? 'I' : (*l == Pauli::X ? 'X' : (*l == Pauli::Y ? 'Y' : 'Z'));
    }
    return out;
}

double expectation(const QState &state, const PauliString &p) {
    if (p.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("Pauli string and state have different qubit counts");
    }
    // P|i> = i^{#y} (-1)^{popcount(i & phase)} |i ^ flip>
    const auto amps = state.amplitudes();
    const std::uint32_t flip = p.flip_mask();
    const std::uint32_t phase = p.phase_mask();
    Complex acc{0.0, 0.0};
    for (std::uint32_t i = 0; i < amps.size(); ++i) {
        const Complex term = std::conj(amps[i ^ flip]) * amps[i];
        if ((std::popcount(i & phase) & 1) != 0) {
            acc -= term;
        } else {
            acc += term;
        }
    }
    return checked_real(i_pow(p.num_y()) * acc);
}

std::vector<double> correlation_block(const QState &state, const QubitSet &subset) {
    const int n = state.num_qubits();
    if (subset.num_qubits() != n) {
        throw std::invalid_argument("subset and state have different qubit counts");
    }
    const int k = subset.size();
    const std::uint32_t s_mask = subset.mask();
    const std::uint32_t rest = ~s_mask & ((1U << n) - 1U);
    const std::size_t ksize = std::size_t{1} << k;

    // Submasks of the subset in increasing order; sub[u] expands compressed
    // index u. Compressed bit k-1-j belongs to the j-th lowest position.
    std::vector<std::uint32_t> sub(ksize);
    {
        std::uint32_t s = 0;
        for (std::size_t u = 0; u < ksize; ++u) {
            sub[u] = s;
            s = (s - s_mask) & s_mask;
        }
    }
    std::size_t nletters = 1;
    for (int j = 0; j < k; ++j) {
        nletters *= 3;
    }

    const auto amps = state.amplitudes();
    const std::uint32_t full_k = static_cast<std::uint32_t>(ksize - 1);
    std::vector<double> out(nletters, 0.0);
    std::vector<Complex> m(ksize);
    for (std::uint32_t xc = 0; xc < ksize; ++xc) {
        const std::uint32_t flip = sub[xc];
        // Marginal of conj(a[i ^ flip]) a[i] onto the subset bits.
        for (std::size_t u = 0; u < ksize; ++u) {
            Complex acc{0.0, 0.0};
            std::uint32_t r = 0;
            do {
                const std::uint32_t i = sub[u] | r;
                acc += std::conj(amps[i ^ flip]) * amps[i];
                r = (r - rest) & rest;
            } while (r != 0U);
            m[u] = acc;
        }
        walsh_hadamard(m);
        // Flipped positions carry x or y; the others carry z.
        std::uint32_t y = 0;
        do {
            const std::uint32_t phase = y | (full_k ^ xc);
            const double val = checked_real(i_pow(std::popcount(y)) * m[phase]);
            std::size_t idx = 0;
            for (int j = 0; j < k; ++j) {
                const std::uint32_t bit = 1U << (k - 1 - j);
                const std::size_t digit = (xc & bit) == 0U ? 2 : ((y & bit) == 0U ? 0 : 1);
                idx = idx * 3 + digit;
            }
            out[idx] = val;
            y = (y - xc) & xc;
        } while (y != 0U);
    }
    return out;
}

double f_invariant(const QState &state, const QubitSet &subset) {
    if (subset.empty()) {
        throw std::invalid_argument("F invariant needs a nonempty subset");
    }
    double acc = 0.0;
    for (const double e : correlation_block(state, subset)) {
        acc += e * e;
    }
    return acc;
}

WeightSums weight_sums(const QState &state, int k_max, SumStrategy strategy) {
    const int n = state.num_qubits();
    if (k_max < 1 || k_max > n) {
        throw std::out_of_range("k_max must lie in 1..n");
    }
    WeightSums out{n, std::vector<double>(static_cast<std::size_t>(k_max), 0.0)};

    if (strategy == SumStrategy::Enumeration) {
        for (int k = 1; k <= k_max; ++k) {
            const auto subsets = subsets_of_size(n, k);
            std::vector<double> f(subsets.size());
            const auto count = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic)
            for (std::int64_t s = 0; s < count; ++s) {
                f[static_cast<std::size_t>(s)] =
                    f_invariant(state, subsets[static_cast<std::size_t>(s)]);
            }
            double acc = 0.0;
            for (const double v : f) {
                acc += v;
            }
            out.m[static_cast<std::size_t>(k - 1)] = acc;
        }
        return out;
    }

    // G_m for m = 0..k_max, then forward substitution (unit diagonal).
    std::vector<double> g(static_cast<std::size_t>(k_max) + 1, 0.0);
    g[0] = 1.0;
    for (int m = 1; m <= k_max; ++m) {
        const auto subsets = subsets_of_size(n, m);
        std::vector<double> pur(subsets.size());
        const auto count = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t s = 0; s < count; ++s) {
            pur[static_cast<std::size_t>(s)] = detail::subset_purity(
                state.amplitudes(), n, subsets[static_cast<std::size_t>(s)].mask());
        }
        double acc = 0.0;
        for (const double v : pur) {
            acc += v;
        }
        g[static_cast<std::size_t>(m)] = std::ldexp(acc, m);
    }
    std::vector<double> mk(static_cast<std::size_t>(k_max) + 1, 0.0);
    mk[0] = 1.0;
    for (int m = 1; m <= k_max; ++m) {
        double v = g[static_cast<std::size_t>(m)];
        for (int k = 0; k < m; ++k) {
            v -= static_cast<double>(binomial(n - k, m - k)) * mk[static_cast<std::size_t>(k)];
        }
        mk[static_cast<std::size_t>(m)] = v;
        out.m[static_cast<std::size_t>(m - 1)] = v;
    }
    return out;
}

double n_tangle(const QState &state) {
    const int n = state.num_qubits();
    if (n % 2 != 0) {
        throw std::invalid_argument("n-tangle is defined for even qubit counts only, got n=" +
                                    std::to_string(n));
    }
    // Y^(x)n |j> = i^n (-1)^{popcount j} |~j>, so the overlap reduces to
    // sum_j (-1)^{popcount j} a_j a_{~j} up to a unit phase.
    const auto amps = state.amplitudes();
    const std::uint32_t full = static_cast<std::uint32_t>(amps.size() - 1);
    Complex acc{0.0, 0.0};
    for (std::uint32_t j = 0; j < amps.size(); ++j) {
        const Complex term = amps[j] * amps[full ^ j];
        if ((std::popcount(j) & 1) != 0) {
            acc -= term;
        } else {
            acc += term;
        }
    }
    return std::norm(acc);
}

} // namespace mmeslab
