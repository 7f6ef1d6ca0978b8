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
 * Reduced-state purities and the balanced-bipartition average pi_ME,
 * computed from the reshaped amplitude matrix without reference to any
 * correlation invariant.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mmeslab/qubit_set.hpp"
#include "mmeslab/state.hpp"

namespace mmeslab {

/// Tolerance on purity values leaving [0, 1] before they count as a kernel
/// error.
inline constexpr double kPurityTolerance = 1e-10;

/// Tr rho_A^2 for rho_A = Tr_{complement} |psi><psi|. `part_a` must be a
/// nonempty proper subset.
double reduced_purity(const QState &state, const QubitSet &part_a);

struct PurityReport {
    int n = 0;
    /// floor(n/2).
    int part_size = 0;
    /// Every size-part_size subset in lexicographic order; for even n each
    /// unordered bipartition appears twice, once per side.
    std::vector<QubitSet> parts;
    std::vector<double> purities;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;

    [[nodiscard]] std::size_t count() const noexcept { return purities.size(); }
};

/// Enumerates all C(n, floor(n/2)) subsets. For even n only subsets holding
/// qubit 1 are computed; their complements take the same value.
PurityReport average_balanced_purity(const QState &state);

namespace detail {

/// Submasks of `mask` in increasing numeric order.
std::vector<std::uint32_t> submasks(std::uint32_t mask);

/// Tr rho_A^2 for an arbitrary (possibly empty, full or unnormalized)
/// amplitude vector. Quartic in the amplitudes.
double subset_purity(std::span<const Complex> amps, int n, std::uint32_t mask);

/// subset_purity plus `weight` times its gradient, accumulated into `grad`.
/// The gradient is stored as d/dRe + i d/dIm = 4 (M M^H M) scattered back to
/// amplitude order, where M is the reshaped amplitude matrix.
double subset_purity_with_gradient(std::span<const Complex> amps, int n,
                                   std::uint32_t mask, double weight,
                                   std::span<Complex> grad);

/// pi_ME of a raw amplitude vector (even or odd n), optionally with its
/// gradient written to `grad` (overwritten, size 2^n).
double average_balanced_purity_raw(std::span<const Complex> amps, int n,
                                   std::span<Complex> grad = {});

} // namespace detail

} // namespace mmeslab
