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
#include "mmeslab/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mmeslab/purity.hpp"
#include "mmeslab/rng.hpp"

namespace mmeslab {

namespace {

Rational rat(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

std::vector<Coefficient> coeffs(std::initializer_list<Rational> rs) {
    std::vector<Coefficient> out;
    for (const auto &r : rs) {
        out.push_back(Coefficient::of(r));
    }
    return out;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

bool has_printed_model(int n) {
    return std::find(kModelSizes.begin(), kModelSizes.end(), n) != kModelSizes.end();
}

bool DecompositionModel::is_exact() const noexcept {
    return constant.exact && tau_coeff.exact && tau_offset.exact &&
           std::all_of(weight_coeffs.begin(), weight_coeffs.end(),
                       [](const Coefficient &c) { return c.exact.has_value(); });
}

double DecompositionModel::k_value(const WeightSums &m, double tau) const {
    if (m.k_max() < static_cast<int>(weight_coeffs.size())) {
        throw std::invalid_argument("weight sums do not reach the model's maximum weight");
    }
    double k = 0.0;
    for (std::size_t j = 0; j < weight_coeffs.size(); ++j) {
        k += weight_coeffs[j].value * m.m[j];
    }
    return k + tau_coeff.value * tau + tau_offset.value;
}

std::optional<Rational> DecompositionModel::exact_k(std::span<const std::int64_t> m,
                                                    std::int64_t tau) const {
    if (!is_exact()) {
        return std::nullopt;
    }
    if (m.size() < weight_coeffs.size()) {
        throw std::invalid_argument("weight sums do not reach the model's maximum weight");
    }
    Rational k = *tau_coeff.exact * tau + *tau_offset.exact;
    for (std::size_t j = 0; j < weight_coeffs.size(); ++j) {
        k += *weight_coeffs[j].exact * m[j];
    }
    return k;
}

DecompositionModel printed_model(int n, TwelveQubitReading reading) {
    DecompositionModel m;
    m.n = n;
    m.provenance = Provenance::Printed;
    m.tau_offset = Coefficient::of(rat(0));
    switch (n) {
    case 2:
        m.constant = Coefficient::of(rat(1, 2));
        m.tau_coeff = Coefficient::of(rat(-1, 2));
        m.tau_offset = Coefficient::of(rat(1, 2));
        break;
    case 4:
        m.constant = Coefficient::of(rat(1, 3));
        m.weight_coeffs = coeffs({rat(1, 6)});
        m.tau_coeff = Coefficient::of(rat(1, 6));
        break;
    case 6:
        m.constant = Coefficient::of(rat(1, 8));
        m.weight_coeffs = coeffs({rat(3, 40), rat(1, 40)});
        m.tau_coeff = Coefficient::of(rat(-1, 20));
        m.tau_offset = Coefficient::of(rat(1, 20));
        break;
    case 8:
        m.constant = Coefficient::of(rat(6, 70));
        m.weight_coeffs = coeffs({rat(11, 280), rat(1, 70), rat(1, 280)});
        m.tau_coeff = Coefficient::of(rat(1, 70));
        break;
    case 10:
        m.constant = Coefficient::of(rat(13, 336));
        m.weight_coeffs = coeffs({rat(5, 252), rat(2, 252), rat(1, 252) * rat(5, 8),
                                  rat(2, 252) * rat(1, 8)});
        m.tau_coeff = Coefficient::of(rat(-1, 252));
        m.tau_offset = Coefficient::of(rat(1, 252));
        break;
    case 12:
        m.constant = Coefficient::of(rat(157, 7392));
        if (reading == TwelveQubitReading::FifthGroupIsWeight5) {
            m.weight_coeffs = coeffs({rat(37, 3696), rat(31, 7392), rat(11, 7392),
                                      rat(3, 7392), rat(1, 7392) * rat(1, 2)});
        } else {
            m.weight_coeffs = coeffs({rat(37, 3696), rat(31, 7392), rat(11, 7392),
                                      rat(3, 7392) + rat(1, 7392) * rat(1, 2)});
            // Weight-5 group absent under this reading.
            m.weight_coeffs.push_back(Coefficient::of(rat(0)));
        }
        m.tau_coeff = Coefficient::of(rat(1, 924));
        break;
    default:
        throw std::invalid_argument("no published decomposition for n=" + std::to_string(n));
    }
    return m;
}

KReport evaluate(const DecompositionModel &model, const QState &state, std::string label) {
    const int n = state.num_qubits();
    if (model.n != n) {
        throw std::invalid_argument("model is for n=" + std::to_string(model.n) +
                                    " but the state has " + std::to_string(n) + " qubits");
    }
    KReport r;
    r.label = std::move(label);
    WeightSums ws{n, {}};
    if (model.max_weight() >= 1) {
        ws = weight_sums(state, model.max_weight(), SumStrategy::Enumeration);
    }
    r.m = ws.m;
    r.tau = n_tangle(state);
    r.constant = model.constant.value;
    r.k_model = model.k_value(ws, r.tau);
    r.pi_me_oracle = average_balanced_purity(state).mean;
    r.residual = r.pi_me_oracle - (r.constant + r.k_model);
    return r;
}

VerifySummary verify_identity(int n, std::size_t samples, std::uint64_t seed, double tol,
                              const DecompositionModel &model) {
    if (samples < 1) {
        throw std::invalid_argument("verification needs at least one sample");
    }
    if (model.n != n) {
        throw std::invalid_argument("model size does not match n");
    }
    VerifySummary out;
    out.n = n;
    out.seed = seed;
    out.tol = tol;
    out.states.resize(samples + 3);
    const auto count = static_cast<std::int64_t>(samples);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        auto rng = make_rng(seed, static_cast<std::uint64_t>(i));
        out.states[static_cast<std::size_t>(i)] =
            evaluate(model, random_state(n, rng), "random[" + std::to_string(i) + "]");
    }
    out.states[samples] = evaluate(model, make_basis_state(n, 0), "product");
    out.states[samples + 1] = evaluate(model, make_ghz(n), "ghz");
    out.states[samples + 2] = evaluate(model, make_w(n), "w");

    out.max_abs_residual = 0.0;
    out.min_k = out.states.front().k_model;
    for (const auto &s : out.states) {
        out.max_abs_residual = std::max(out.max_abs_residual, std::abs(s.residual));
        out.min_k = std::min(out.min_k, s.k_model);
    }
    out.passed = out.max_abs_residual <= tol;
    return out;
}

std::vector<ConjectureRow> conjecture_audit(std::span<const int> ns) {
    std::vector<ConjectureRow> rows;
    for (const int n : ns) {
        if (n % 2 != 0 || n > 12 || !has_printed_model(n)) {
            throw std::invalid_argument("conjecture audit covers even n in 2..12, got " +
                                        std::to_string(n));
        }
        const auto model = printed_model(n);
        ConjectureRow row;
        row.n = n;
        row.constant = *model.constant.exact;
        row.tau_coeff = *model.tau_coeff.exact;
        row.required_tau = row.tau_coeff < 0 ? 1 : 0;
        row.conjectured_tau = n % 4 == 0 ? 0 : 1;
        row.consistent = row.required_tau == row.conjectured_tau;
        row.hard_floor = Rational(1, std::int64_t{1} << (n / 2));
        row.upper_bracket = Rational(1, std::int64_t{1} << (n / 2 - 1));
        row.floor_in_bracket = row.hard_floor <= row.constant && row.constant < row.upper_bracket;
        rows.push_back(row);
    }
    return rows;
}

std::vector<ClaimCheck> claimed_k_audit(double tol) {
    struct Claim {
        int n;
        const char *state;
        Rational k;
    };
    // In-text values for the product and GHZ reference states. The n=12 pair
    // repeats the n=10 numbers verbatim.
    const std::array<Claim, 10> claims{{
        {4, "product", rat(2, 3)},     {4, "ghz", rat(1, 6)},
        {6, "product", rat(7, 8)},     {6, "ghz", rat(3, 8)},
        {8, "product", rat(64, 70)},   {8, "ghz", rat(29, 70)},
        {10, "product", rat(323, 336)}, {10, "ghz", rat(155, 336)},
        {12, "product", rat(323, 336)}, {12, "ghz", rat(155, 336)},
    }};
    std::vector<ClaimCheck> out;
    for (const auto &c : claims) {
        const auto model = printed_model(c.n);
        const std::string state_name = c.state;
        const QState s = state_name == "ghz" ? make_ghz(c.n) : make_basis_state(c.n, 0);
        const auto rep = evaluate(model, s, state_name);
        ClaimCheck chk;
        chk.n = c.n;
        chk.state = state_name;
        chk.claimed_k = c.k;
        chk.oracle_k = rep.pi_me_oracle - rep.constant;
        chk.printed_model_k = rep.k_model;
        chk.claim_matches_oracle = std::abs(to_double(c.k) - chk.oracle_k) <= tol;
        chk.model_matches_oracle = std::abs(rep.residual) <= tol;
        out.push_back(chk);
    }
    return out;
}

std::vector<ReadingCheck> twelve_qubit_reading_audit(double tol) {
    const QState ghz = make_ghz(12);
    const QState product = make_basis_state(12, 0);
    std::vector<ReadingCheck> out;
    for (const auto reading : {TwelveQubitReading::FifthGroupIsWeight5,
                               TwelveQubitReading::FifthGroupRepeatsWeight4}) {
        const auto model = printed_model(12, reading);
        ReadingCheck chk;
        chk.reading = reading;
        chk.residual_ghz = evaluate(model, ghz).residual;
        chk.residual_product = evaluate(model, product).residual;
        chk.survives = std::abs(chk.residual_ghz) <= tol && std::abs(chk.residual_product) <= tol;
        out.push_back(chk);
    }
    return out;
}

PsiM8Audit audit_psi_m8(double tol) {
    const auto psi = make_psi_m8();
    const QState &s = psi.state;
    PsiM8Audit a;
    a.raw_norm = psi.raw_norm;
    a.support_size = psi.support_size;
    for (int k = 1; k <= 8; ++k) {
        a.f_single.push_back(f_invariant(s, QubitSet(8, {k})));
    }
    a.m = weight_sums(s, 3).m;
    a.tau = n_tangle(s);
    a.pi_me = average_balanced_purity(s).mean;
    a.printed = evaluate(printed_model(8), s, "psi_m8");
    for (std::size_t k = 0; k < a.m.size(); ++k) {
        if (a.m[k] > tol) {
            a.deviations.push_back("M_" + std::to_string(k + 1) + " = " + format_double(a.m[k]));
        }
    }
    if (a.tau > tol) {
        a.deviations.push_back("tau_8 = " + format_double(a.tau));
    }
    a.claim_holds = a.deviations.empty();
    return a;
}

} // namespace mmeslab
