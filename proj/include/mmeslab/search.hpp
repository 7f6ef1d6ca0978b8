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
 * Minimization of the balanced-bipartition average purity over pure states
 * by projected gradient descent on the unit sphere.
 */
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mmeslab/state.hpp"

namespace mmeslab {

enum class SearchObjective {
    /// pi_ME from the purity oracle.
    Oracle,
    /// C + K from the published model for n; final states are re-scored
    /// with the oracle.
    Model,
};

struct SearchConfig {
    int n = 4;
    int restarts = 8;
    int max_iters = 3000;
    double grad_tol = 1e-10;
    /// Stop when one accepted step improves the objective by less than this.
    double f_tol = 1e-15;
    double initial_step = 0.25;
    double max_step = 16.0;
    double armijo = 1e-4;
    double backtrack = 0.5;
    int max_backtracks = 60;
    std::uint64_t seed = 0;
    SearchObjective objective = SearchObjective::Oracle;
};

struct RestartTrace {
    std::uint64_t stream = 0;
    double initial_value = 0.0;
    double final_value = 0.0;
    int iterations = 0;
    std::string stop_reason;
};

struct SearchResult {
    QState best_state;
    /// Oracle pi_ME of best_state.
    double best_pi_me = 0.0;
    int best_restart = 0;
    std::vector<RestartTrace> restarts;
    double wall_seconds = 0.0;
};

/// Throws std::invalid_argument on an invalid configuration (odd n, n outside
/// 2..12, nonpositive tolerances or restart counts).
SearchResult minimize_average_purity(const SearchConfig &config);

/// Objective value at a raw (normalized) amplitude vector; fills `grad`
/// (d/dRe + i d/dIm per amplitude) when nonempty.
double search_objective(std::span<const Complex> amps, int n, SearchObjective objective,
                        std::span<Complex> grad = {});

/// Largest deviation between the analytic pi_ME gradient and central finite
/// differences (step 1e-5) over all 2^(n+1) real parameters, at
/// random_state(n, seed). Even n <= 6 only.
double gradient_check(int n, std::uint64_t seed);

/// Same comparison at an arbitrary amplitude vector.
double gradient_deviation(std::span<const Complex> amps, int n, double step = 1e-5);

} // namespace mmeslab
