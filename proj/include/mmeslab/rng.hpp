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
 * Deterministic random sampling. Every stream is an mt19937_64 seeded by a
 * splitmix64 hash of (seed, stream id), so parallel workers that draw from
 * distinct stream ids produce the same values regardless of scheduling.
 */
#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "mmeslab/state.hpp"

namespace mmeslab {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

/// Seed for substream `stream` of a run seeded with `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return Rng{derive_seed(seed, stream)};
}

/// Haar-random state drawn from an existing generator.
QState random_state(int n, Rng &rng);

/// Haar-random 2x2 unitary, row-major.
std::array<Complex, 4> random_unitary2(Rng &rng);

/// Tensor product of n independent Haar-random single-qubit states.
QState random_product_state(int n, Rng &rng);

/// Applies an independent Haar-random unitary to every qubit.
QState random_local_unitary(const QState &state, Rng &rng);

} // namespace mmeslab
