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
 * Sets of qubit positions. Positions are 1-based; internally a set is the
 * index-bit mask it selects, so qubit 1 maps to the highest bit.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mmeslab {

class QubitSet {
  public:
    QubitSet() = default;
    /// Throws std::out_of_range for positions outside 1..n and
    /// std::invalid_argument for repeated positions.
    QubitSet(int n, const std::vector<int> &positions);

    static QubitSet from_mask(int n, std::uint32_t mask);
    static QubitSet all(int n);

    [[nodiscard]] int num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::uint32_t mask() const noexcept { return mask_; }
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return mask_ == 0U; }
    [[nodiscard]] bool contains(int k) const noexcept;
    /// Ascending positions.
    [[nodiscard]] std::vector<int> positions() const;
    [[nodiscard]] QubitSet complement() const;
    /// "{1,3,4}"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const QubitSet &, const QubitSet &) = default;

  private:
    int n_ = 0;
    std::uint32_t mask_ = 0;
};

/// All size-k subsets of {1..n} in lexicographic order of their ascending
/// position lists: {1,2}, {1,3}, ..., {n-1,n}.
std::vector<QubitSet> subsets_of_size(int n, int k);

/// Exact binomial coefficient for the small arguments used here.
std::uint64_t binomial(int n, int k);

} // namespace mmeslab
