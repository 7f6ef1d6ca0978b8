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
#include "mmeslab/qubit_set.hpp"

#include <bit>
#include <stdexcept>

#include "mmeslab/state.hpp"

namespace mmeslab {

QubitSet::QubitSet(int n, const std::vector<int> &positions) : n_(n) {
    check_qubit_count(n);
    for (const int k : positions) {
        if (k < 1 || k > n) {
            throw std::out_of_range("qubit position " + std::to_string(k) +
                                    " outside 1.." + std::to_string(n));
        }
        const auto bit = qubit_bit(n, k);
        if ((mask_ & bit) != 0U) {
            throw std::invalid_argument("repeated qubit position " +
                                        std::to_string(k));
        }
        mask_ |= bit;
    }
}

QubitSet QubitSet::from_mask(int n, std::uint32_t mask) {
    check_qubit_count(n);
    if ((mask >> n) != 0U) {
        throw std::out_of_range("mask has bits beyond the register");
    }
    QubitSet s;
    s.n_ = n;
    s.mask_ = mask;
    return s;
}

QubitSet QubitSet::all(int n) { return from_mask(n, (1U << n) - 1U); }

int QubitSet::size() const noexcept { return std::popcount(mask_); }

bool QubitSet::contains(int k) const noexcept {
    return k >= 1 && k <= n_ && (mask_ & qubit_bit(n_, k)) != 0U;
}

std::vector<int> QubitSet::positions() const {
    std::vector<int> out;
    for (int k = 1; k <= n_; ++k) {
        if (contains(k)) {
            out.push_back(k);
        }
    }
    return out;
}

QubitSet QubitSet::complement() const {
    return from_mask(n_, ~mask_ & ((1U << n_) - 1U));
}

std::string QubitSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const int k : positions()) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(k);
        first = false;
    }
    return out + "}";
}

std::vector<QubitSet> subsets_of_size(int n, int k) {
    check_qubit_count(n);
    if (k < 0 || k > n) {
        throw std::out_of_range("subset size outside 0..n");
    }
    std::vector<QubitSet> out;
    out.reserve(binomial(n, k));
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        pos[static_cast<std::size_t>(j)] = j + 1;
    }
    while (true) {
        out.emplace_back(n, pos);
        int j = k - 1;
        while (j >= 0 && pos[static_cast<std::size_t>(j)] == n - k + j + 1) {
            --j;
        }
        if (j < 0) {
            break;
        }
        ++pos[static_cast<std::size_t>(j)];
        for (int r = j + 1; r < k; ++r) {
            pos[static_cast<std::size_t>(r)] = pos[static_cast<std::size_t>(r - 1)] + 1;
        }
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (int j = 1; j <= k; ++j) {
        r = r * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
    }
    return r;
}

} // namespace mmeslab
