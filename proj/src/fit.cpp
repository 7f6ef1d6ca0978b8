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
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "mmeslab/decomposition.hpp"
#include "mmeslab/purity.hpp"
#include "mmeslab/rng.hpp"

namespace mmeslab {

namespace {

// Held-out states come from a substream range disjoint from training.
constexpr std::uint64_t kHoldoutStream = 1ULL << 40U;

QState blend(const QState &a, const QState &b, double t) {
    std::vector<Complex> amps(a.dim());
    const double ca = std::cos(t);
    const double cb = std::sin(t);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = ca * a[i] + cb * b[i];
    }
    return QState::from_unnormalized(a.num_qubits(), std::move(amps));
}

struct Sample {
    std::vector<double> features;
    double target = 0.0;
};

// Features {1, M_1..M_{n/2-1}, tau}; target is the oracle pi_ME.
Sample sample_of(const QState &s) {
    const int n = s.num_qubits();
    const int h = n / 2 - 1;
    Sample out;
    out.features.push_back(1.0);
    if (h >= 1) {
        const auto ws = weight_sums(s, h, SumStrategy::Enumeration);
        out.features.insert(out.features.end(), ws.m.begin(), ws.m.end());
    }
    out.features.push_back(n_tangle(s));
    out.target = average_balanced_purity(s).mean;
    return out;
}

std::vector<Sample> samples_of(const std::vector<QState> &states) {
    std::vector<Sample> out(states.size());
    const auto count = static_cast<std::int64_t>(states.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = sample_of(states[static_cast<std::size_t>(i)]);
    }
    return out;
}

double max_residual(const std::vector<Sample> &set, const std::vector<double> &coef) {
    double worst = 0.0;
    for (const auto &s : set) {
        double pred = 0.0;
        for (std::size_t j = 0; j < coef.size(); ++j) {
            pred += coef[j] * s.features[j];
        }
        worst = std::max(worst, std::abs(s.target - pred));
    }
    return worst;
}

// Intercept, weight coefficients and tau coefficient in feature order, with
// the intercept split as C + tau_offset so that K >= 0 form is kept: a
// negative tau coefficient becomes c_tau (tau - 1) + C.
DecompositionModel model_from(int n, const std::vector<Coefficient> &c) {
    DecompositionModel m;
    m.n = n;
    m.provenance = Provenance::Fitted;
    const Coefficient &c0 = c.front();
    const Coefficient &ct = c.back();
    m.weight_coeffs.assign(c.begin() + 1, c.end() - 1);
    m.tau_coeff = ct;
    if (ct.value < 0.0) {
        if (c0.exact && ct.exact) {
            m.constant = Coefficient::of(*c0.exact + *ct.exact);
            m.tau_offset = Coefficient::of(-*ct.exact);
        } else {
            m.constant = Coefficient::approx(c0.value + ct.value);
            m.tau_offset = Coefficient::approx(-ct.value);
        }
    } else {
        m.constant = c0;
        m.tau_offset = Coefficient::of(Rational(0));
    }
    return m;
}

} // namespace

QState fit_training_state(int n, std::uint64_t seed, std::size_t index) {
    auto rng = make_rng(seed, index);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 2);
    switch (index % 3) {
    case 0:
        return random_state(n, rng);
    case 1: {
        const QState prod = random_product_state(n, rng);
        const QState haar = random_state(n, rng);
        return blend(prod, haar, angle(rng));
    }
    default: {
        const QState ghz = random_local_unitary(make_ghz(n), rng);
        const QState haar = random_state(n, rng);
        return blend(ghz, haar, angle(rng));
    }
    }
}

FitResult fit_coefficients(int n, std::size_t samples, std::uint64_t seed,
                           const FitOptions &opts) {
    if (n % 2 != 0 || n < 2 || n > 12) {
        throw std::invalid_argument("coefficient fitting supports even n in 2..12, got " +
                                    std::to_string(n));
    }
    const std::size_t min_samples = 4 * static_cast<std::size_t>(n / 2 + 2);
    if (samples < min_samples) {
        throw std::invalid_argument("fit needs at least " + std::to_string(min_samples) +
                                    " samples for n=" + std::to_string(n));
    }

    FitResult res;
    res.training_samples = samples;
    res.feature_names.emplace_back("1");
    for (int k = 1; k <= n / 2 - 1; ++k) {
        res.feature_names.push_back("M_" + std::to_string(k));
    }
    res.feature_names.emplace_back("tau");
    const auto p = static_cast<Eigen::Index>(res.feature_names.size());

    std::vector<QState> train_states;
    for (std::size_t i = 0; i < samples; ++i) {
        train_states.push_back(fit_training_state(n, seed, i));
    }
    std::vector<QState> holdout_states;
    for (std::size_t j = 0; j < opts.holdout; ++j) {
        auto rng = make_rng(seed, kHoldoutStream + j);
        holdout_states.push_back(random_state(n, rng));
    }
    const auto train = samples_of(train_states);
    const auto holdout = samples_of(holdout_states);

    Eigen::MatrixXd a(static_cast<Eigen::Index>(samples), p);
    Eigen::VectorXd b(static_cast<Eigen::Index>(samples));
    for (std::size_t i = 0; i < samples; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) {
            a(static_cast<Eigen::Index>(i), j) = train[i].features[static_cast<std::size_t>(j)];
        }
        b(static_cast<Eigen::Index>(i)) = train[i].target;
    }
    // Column equilibration before the SVD; the features differ in scale by
    // orders of magnitude.
    Eigen::VectorXd scale = a.cwiseAbs().colwise().maxCoeff().transpose();
    for (Eigen::Index j = 0; j < p; ++j) {
        if (scale(j) == 0.0) {
            scale(j) = 1.0;
        }
    }
    const Eigen::MatrixXd a_scaled = a * scale.cwiseInverse().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a_scaled, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    const Eigen::VectorXd sv = svd.singularValues();
    res.singular_values.assign(sv.data(), sv.data() + sv.size());
    res.rank = static_cast<int>(svd.rank());
    res.null_space_dim = static_cast<int>(p) - res.rank;
    if (res.null_space_dim > 0) {
        res.notes.push_back("feature matrix has a " + std::to_string(res.null_space_dim) +
                            "-dimensional null space; minimum-norm solution reported");
    }
    const Eigen::VectorXd x = svd.solve(b).cwiseQuotient(scale);
    res.raw_coefficients.assign(x.data(), x.data() + x.size());

    res.training_residual = max_residual(train, res.raw_coefficients);
    res.holdout_residual = max_residual(holdout, res.raw_coefficients);
    res.holdout_residual_snapped = res.holdout_residual;
    res.exact_identity = res.training_residual <= opts.identity_threshold;
    if (!res.exact_identity) {
        res.notes.push_back("training residual above identity threshold; no exact identity "
                            "over these features");
    }

    std::vector<Coefficient> coef;
    for (const double v : res.raw_coefficients) {
        coef.push_back(Coefficient::approx(v));
    }
    if (opts.snap && res.null_space_dim == 0) {
        std::vector<Coefficient> snapped = coef;
        std::vector<double> snapped_values;
        int hits = 0;
        for (auto &c : snapped) {
            if (auto r = snap_rational(c.value, opts.max_denominator, opts.snap_tolerance)) {
                c = Coefficient::of(*r);
                ++hits;
            }
            snapped_values.push_back(c.value);
        }
        const double snapped_residual = max_residual(holdout, snapped_values);
        if (hits > 0 && snapped_residual <= opts.tolerance) {
            coef = std::move(snapped);
            res.snapped = true;
            res.holdout_residual_snapped = snapped_residual;
            if (hits < static_cast<int>(coef.size())) {
                res.notes.push_back(std::to_string(static_cast<int>(coef.size()) - hits) +
                                    " coefficient(s) left floating");
            }
        } else if (hits > 0) {
            res.notes.push_back("rational snapping rejected: held-out residual " +
                                std::to_string(snapped_residual));
        }
    }
    res.model = model_from(n, coef);
    return res;
}

} // namespace mmeslab
