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
#include "mmeslab/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mmeslab/decomposition.hpp"
#include "mmeslab/purity.hpp"
#include "mmeslab/rng.hpp"

namespace mmeslab {

namespace {

double real_dot(std::span<const Complex> a, std::span<const Complex> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    }
    return acc;
}

void normalize(std::vector<Complex> &v) {
    double nrm = 0.0;
    for (const auto &x : v) {
        nrm += std::norm(x);
    }
    nrm = std::sqrt(nrm);
    for (auto &x : v) {
        x /= nrm;
    }
}

// C + K of the published model, with gradient. Each squared expectation
// e^2 contributes 4 e P|psi>; tau = |t|^2 with t = sum_j s_j a_j a_~j
// contributes 4 t s_j conj(a_~j).
double model_objective(std::span<const Complex> amps, int n, std::span<Complex> grad) {
    const auto model = printed_model(n);
    const bool want_grad = !grad.empty();
    if (want_grad) {
        std::fill(grad.begin(), grad.end(), Complex{0.0, 0.0});
    }
    double value = model.constant.value + model.tau_offset.value;
    std::vector<Complex> p_psi(amps.size());
    for (int k = 1; k <= model.max_weight(); ++k) {
        const double ck = model.weight_coeffs[static_cast<std::size_t>(k - 1)].value;
        for (const auto &subset : subsets_of_size(n, k)) {
            const auto sub = detail::submasks(subset.mask());
            // Every lettering of the subset: flip set X, y set Y within X,
            // z on the rest.
            for (const std::uint32_t flip : sub) {
                std::uint32_t y = 0;
                do {
                    const std::uint32_t phase = y | (subset.mask() ^ flip);
                    const int ny = std::popcount(y);
                    const Complex ipow = ny % 4 == 0   ? Complex{1, 0}
                                         : ny % 4 == 1 ? Complex{0, 1}
                                         : ny % 4 == 2 ? Complex{-1, 0}
                                                       : Complex{0, -1};
                    Complex e{0.0, 0.0};
                    for (std::uint32_t i = 0; i < amps.size(); ++i) {
                        const double s = (std::popcount(i & phase) & 1) != 0 ? -1.0 : 1.0;
                        // (P psi)[i ^ flip] = i^ny s a_i
                        p_psi[i ^ flip] = ipow * s * amps[i];
                    }
                    for (std::uint32_t i = 0; i < amps.size(); ++i) {
                        e += std::conj(amps[i]) * p_psi[i];
                    }
                    const double er = e.real();
                    value += ck * er * er;
                    if (want_grad) {
                        for (std::size_t i = 0; i < amps.size(); ++i) {
                            grad[i] += 4.0 * ck * er * p_psi[i];
                        }
                    }
                    y = (y - flip) & flip;
                } while (y != 0U);
            }
        }
    }
    const std::uint32_t full = static_cast<std::uint32_t>(amps.size() - 1);
    Complex t{0.0, 0.0};
    for (std::uint32_t j = 0; j < amps.size(); ++j) {
        const double s = (std::popcount(j) & 1) != 0 ? -1.0 : 1.0;
        t += s * amps[j] * amps[full ^ j];
    }
    const double ct = model.tau_coeff.value;
    value += ct * std::norm(t);
    if (want_grad) {
        for (std::uint32_t j = 0; j < amps.size(); ++j) {
            const double s = (std::popcount(j) & 1) != 0 ? -1.0 : 1.0;
            grad[j] += 4.0 * ct * t * s * std::conj(amps[full ^ j]);
        }
    }
    return value;
}

void check_config(const SearchConfig &c) {
    if (c.n < 2 || c.n > 12 || c.n % 2 != 0) {
        throw std::invalid_argument("search needs even n in 2..12, got " + std::to_string(c.n));
    }
    if (c.restarts < 1 || c.max_iters < 1 || c.max_backtracks < 1) {
        throw std::invalid_argument("restarts, max_iters and max_backtracks must be positive");
    }
    if (!(c.grad_tol > 0.0) || !(c.f_tol > 0.0) || !(c.initial_step > 0.0) ||
        !(c.max_step >= c.initial_step) || !(c.armijo > 0.0 && c.armijo < 1.0) ||
        !(c.backtrack > 0.0 && c.backtrack < 1.0)) {
        throw std::invalid_argument("invalid tolerance or step-size control");
    }
}

struct RestartOutcome {
    RestartTrace trace;
    std::vector<Complex> state;
};

RestartOutcome run_restart(const SearchConfig &c, std::uint64_t stream) {
    const int n = c.n;
    auto rng = make_rng(c.seed, stream);
    const QState start = random_state(n, rng);
    std::vector<Complex> psi(start.amplitudes().begin(), start.amplitudes().end());
    std::vector<Complex> grad(psi.size());
    std::vector<Complex> cand(psi.size());

    RestartOutcome out;
    out.trace.stream = stream;
    double f = search_objective(psi, n, c.objective, grad);
    out.trace.initial_value = f;
    double step = c.initial_step;
    out.trace.stop_reason = "max_iters";
    int it = 0;
    for (; it < c.max_iters; ++it) {
        // Tangent-space projection of the ambient gradient.
        const double radial = real_dot(psi, grad);
        for (std::size_t i = 0; i < psi.size(); ++i) {
            grad[i] -= radial * psi[i];
        }
        const double gnorm2 = real_dot(grad, grad);
        if (std::sqrt(gnorm2) < c.grad_tol) {
            out.trace.stop_reason = "gradient_tolerance";
            break;
        }
        bool accepted = false;
        double f_new = f;
        for (int bt = 0; bt < c.max_backtracks; ++bt) {
            for (std::size_t i = 0; i < psi.size(); ++i) {
                cand[i] = psi[i] - step * grad[i];
            }
            normalize(cand);
            f_new = search_objective(cand, n, c.objective);
            if (f_new <= f - c.armijo * step * gnorm2) {
                accepted = true;
                break;
            }
            step *= c.backtrack;
        }
        if (!accepted) {
            out.trace.stop_reason = "line_search_exhausted";
            break;
        }
        const double gain = f - f_new;
        psi.swap(cand);
        f = search_objective(psi, n, c.objective, grad);
        step = std::min(step * 2.0, c.max_step);
        if (gain < c.f_tol) {
            ++it;
            out.trace.stop_reason = "objective_stalled";
            break;
        }
    }
    out.trace.iterations = it;
    out.state = std::move(psi);
    normalize(out.state);
    out.trace.final_value =
        detail::average_balanced_purity_raw(out.state, n);
    return out;
}

} // namespace

double search_objective(std::span<const Complex> amps, int n, SearchObjective objective,
                        std::span<Complex> grad) {
    if (objective == SearchObjective::Model) {
        return model_objective(amps, n, grad);
    }
    return detail::average_balanced_purity_raw(amps, n, grad);
}

SearchResult minimize_average_purity(const SearchConfig &config) {
    check_config(config);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < config.restarts; ++r) {
        outcomes[static_cast<std::size_t>(r)] = run_restart(config, static_cast<std::uint64_t>(r));
    }
    std::size_t best = 0;
    for (std::size_t r = 1; r < outcomes.size(); ++r) {
        if (outcomes[r].trace.final_value < outcomes[best].trace.final_value) {
            best = r;
        }
    }
    SearchResult res{QState::from_unnormalized(config.n, outcomes[best].state),
                     outcomes[best].trace.final_value,
                     static_cast<int>(best),
                     {},
                     0.0};
    for (auto &o : outcomes) {
        res.restarts.push_back(std::move(o.trace));
    }
    const double floor = std::ldexp(1.0, -(config.n / 2));
    if (res.best_pi_me < floor - 1e-9) {
        throw std::logic_error("search result below the 2^-(n/2) purity floor");
    }
    res.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

double gradient_deviation(std::span<const Complex> amps, int n, double step) {
    std::vector<Complex> grad(amps.size());
    detail::average_balanced_purity_raw(amps, n, grad);
    std::vector<Complex> probe(amps.begin(), amps.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < probe.size(); ++i) {
        for (const Complex dir : {Complex{1.0, 0.0}, Complex{0.0, 1.0}}) {
            const Complex orig = probe[i];
            probe[i] = orig + step * dir;
            const double fp = detail::average_balanced_purity_raw(probe, n);
            probe[i] = orig - step * dir;
            const double fm = detail::average_balanced_purity_raw(probe, n);
            probe[i] = orig;
            const double fd = (fp - fm) / (2.0 * step);
            const double analytic = dir.real() != 0.0 ? grad[i].real() : grad[i].imag();
            worst = std::max(worst, std::abs(fd - analytic));
        }
    }
    return worst;
}

double gradient_check(int n, std::uint64_t seed) {
    if (n < 2 || n > 6 || n % 2 != 0) {
        throw std::invalid_argument("gradient check supports even n in 2..6");
    }
    const QState s = random_state(n, seed);
    return gradient_deviation(s.amplitudes(), n);
}

} // namespace mmeslab
