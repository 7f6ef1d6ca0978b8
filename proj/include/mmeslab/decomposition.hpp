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
 * Linear decompositions pi_ME = C + K with
 *
 *     K = sum_{k=1}^{n/2-1} c_k M_k + c_tau * tau_n + tau_offset,
 *
 * for even n <= 12: the published coefficient tables, their evaluation
 * against the purity oracle, least-squares refitting, and audits of the
 * published claims.
 *
 * Residuals are always oracle minus model.
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmeslab/pauli.hpp"
#include "mmeslab/rational.hpp"
#include "mmeslab/state.hpp"

namespace mmeslab {

enum class Provenance { Printed, Fitted };

struct Coefficient {
    double value = 0.0;
    /// Present for published coefficients and for fitted ones that snapped.
    std::optional<Rational> exact;

    static Coefficient of(Rational r) { return {to_double(r), r}; }
    static Coefficient approx(double v) { return {v, std::nullopt}; }
};

/// Register sizes that have a published model.
inline constexpr std::array<int, 6> kModelSizes{2, 4, 6, 8, 10, 12};

bool has_printed_model(int n);

struct DecompositionModel {
    int n = 0;
    Coefficient constant;
    /// weight_coeffs[k-1] multiplies M_k, k = 1..n/2-1.
    std::vector<Coefficient> weight_coeffs;
    Coefficient tau_coeff;
    Coefficient tau_offset;
    Provenance provenance = Provenance::Printed;

    [[nodiscard]] int max_weight() const noexcept { return n / 2 - 1; }
    /// True when every coefficient carries an exact rational.
    [[nodiscard]] bool is_exact() const noexcept;
    [[nodiscard]] double k_value(const WeightSums &m, double tau) const;
    /// K in exact arithmetic for integer-valued invariants (`m[k-1]` = M_k).
    /// Empty if any coefficient lacks an exact value.
    [[nodiscard]] std::optional<Rational> exact_k(std::span<const std::int64_t> m,
                                                  std::int64_t tau) const;
};

/// How to read the fifth group of the twelve-qubit table, whose printed
/// subscript range repeats the weight-4 one.
enum class TwelveQubitReading {
    FifthGroupIsWeight5,
    FifthGroupRepeatsWeight4,
};

/// Published coefficient table. Throws std::invalid_argument for n outside
/// kModelSizes.
DecompositionModel printed_model(int n, TwelveQubitReading reading =
                                            TwelveQubitReading::FifthGroupIsWeight5);

struct KReport {
    std::string label;
    /// M_1..M_{n/2-1}.
    std::vector<double> m;
    double tau = 0.0;
    double constant = 0.0;
    double k_model = 0.0;
    double pi_me_oracle = 0.0;
    double residual = 0.0;
};

KReport evaluate(const DecompositionModel &model, const QState &state,
                 std::string label = {});

struct VerifySummary {
    int n = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::vector<KReport> states;
    double max_abs_residual = 0.0;
    double min_k = 0.0;
    bool passed = false;
};

/// Evaluates `model` on `samples` Haar-random states (substreams 0..samples-1
/// of `seed`) followed by the product, GHZ and W states.
VerifySummary verify_identity(int n, std::size_t samples, std::uint64_t seed,
                              double tol, const DecompositionModel &model);

struct FitOptions {
    bool snap = true;
    std::int64_t max_denominator = 1'000'000;
    double snap_tolerance = 1e-10;
    std::size_t holdout = 100;
    /// Held-out residual a fit (snapped or not) must stay within.
    double tolerance = 1e-8;
    /// Training residual above which no exact identity is claimed.
    double identity_threshold = 1e-6;
};

struct FitResult {
    DecompositionModel model;
    /// Least-squares solution over features {1, M_1..M_{n/2-1}, tau}.
    std::vector<double> raw_coefficients;
    std::vector<std::string> feature_names;
    std::vector<double> singular_values;
    int rank = 0;
    int null_space_dim = 0;
    std::size_t training_samples = 0;
    double training_residual = 0.0;
    double holdout_residual = 0.0;
    double holdout_residual_snapped = 0.0;
    bool snapped = false;
    bool exact_identity = false;
    std::vector<std::string> notes;
};

/// Training set: substreams of `seed` cycling through Haar states, blends of
/// random product and Haar states, and blends of locally rotated GHZ and
/// Haar states. Requires samples >= 4 (n/2 + 2).
FitResult fit_coefficients(int n, std::size_t samples, std::uint64_t seed,
                           const FitOptions &opts = {});

/// Sample `index` of the fitting training set.
QState fit_training_state(int n, std::uint64_t seed, std::size_t index);

struct ConjectureRow {
    int n = 0;
    Rational constant;
    Rational tau_coeff;
    /// tau_n value a K = 0 state must have under the model.
    int required_tau = 0;
    /// 0 for n = 0 mod 4, 1 for n = 2 mod 4.
    int conjectured_tau = 0;
    bool consistent = false;
    /// 2^-(n/2) and 2^-(n/2-1); the floor C should lie in [lower, upper).
    Rational hard_floor;
    Rational upper_bracket;
    bool floor_in_bracket = false;
};

std::vector<ConjectureRow> conjecture_audit(std::span<const int> ns);

/// A published K value for a reference state next to what the oracle gives.
struct ClaimCheck {
    int n = 0;
    std::string state;
    Rational claimed_k;
    double oracle_k = 0.0;
    double printed_model_k = 0.0;
    bool claim_matches_oracle = false;
    bool model_matches_oracle = false;
};

std::vector<ClaimCheck> claimed_k_audit(double tol = 1e-10);

struct ReadingCheck {
    TwelveQubitReading reading;
    double residual_ghz = 0.0;
    double residual_product = 0.0;
    bool survives = false;
};

std::vector<ReadingCheck> twelve_qubit_reading_audit(double tol = 1e-10);

struct PsiM8Audit {
    double raw_norm = 0.0;
    std::size_t support_size = 0;
    std::vector<double> f_single;
    /// M_1..M_3.
    std::vector<double> m;
    double tau = 0.0;
    double pi_me = 0.0;
    KReport printed;
    /// The published claim: every F of weight 1-3 vanishes and tau_8 = 0.
    bool claim_holds = false;
    std::vector<std::string> deviations;
};

PsiM8Audit audit_psi_m8(double tol = 1e-9);

} // namespace mmeslab
