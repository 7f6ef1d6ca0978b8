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
#include <cmath>

#include <catch_amalgamated.hpp>

#include "mmeslab/decomposition.hpp"
#include "mmeslab/purity.hpp"
#include "mmeslab/rng.hpp"
#include "oracle/dense_oracle.hpp"

using namespace mmeslab;
using Catch::Matchers::WithinAbs;

namespace {

Rational r(std::int64_t p, std::int64_t q) { return {p, q}; }

} // namespace

TEST_CASE("Published coefficient tables", "[decomposition]") {
    for (const int n : kModelSizes) {
        const auto m = printed_model(n);
        CHECK(m.n == n);
        CHECK(m.provenance == Provenance::Printed);
        CHECK(m.is_exact());
        CHECK(static_cast<int>(m.weight_coeffs.size()) == n / 2 - 1);
        CHECK(has_printed_model(n));
    }
    CHECK(*printed_model(4).constant.exact == r(1, 3));
    CHECK(*printed_model(6).constant.exact == r(1, 8));
    CHECK(*printed_model(10).weight_coeffs[3].exact == r(2, 2016));
    CHECK(*printed_model(12).constant.exact == r(157, 7392));
    CHECK(printed_model(12, TwelveQubitReading::FifthGroupRepeatsWeight4).weight_coeffs.size() == 5);

    CHECK_FALSE(has_printed_model(7));
    CHECK_FALSE(has_printed_model(14));
    CHECK_THROWS_AS(printed_model(7), std::invalid_argument);
    CHECK_THROWS_AS(printed_model(14), std::invalid_argument);
}

TEST_CASE("Model evaluation on reference states", "[decomposition]") {
    const auto ghz6 = evaluate(printed_model(6), make_ghz(6));
    CHECK_THAT(ghz6.k_model, WithinAbs(3.0 / 8.0, 1e-12));
    CHECK_THAT(ghz6.residual, WithinAbs(0.0, 1e-12));

    const auto prod8 = evaluate(printed_model(8), make_basis_state(8, 0));
    CHECK_THAT(prod8.k_model, WithinAbs(64.0 / 70.0, 1e-12));
    CHECK_THAT(prod8.residual, WithinAbs(0.0, 1e-12));

    // The published ten-qubit table overshoots GHZ: its K is 142.5/252
    // whereas the partial-trace value puts K at 1/2 - 13/336 = 155/336.
    const auto ghz10 = evaluate(printed_model(10), make_ghz(10));
    CHECK_THAT(ghz10.k_model, WithinAbs(142.5 / 252.0, 1e-12));
    CHECK_THAT(ghz10.pi_me_oracle, WithinAbs(0.5, 1e-12));
    CHECK_THAT(ghz10.residual, WithinAbs(155.0 / 336.0 - 142.5 / 252.0, 1e-12));

    const auto ghz12 = evaluate(printed_model(12), make_ghz(12));
    CHECK_THAT(ghz12.k_model, WithinAbs(3539.0 / 7392.0, 1e-12));
    const auto prod12 = evaluate(printed_model(12), make_basis_state(12, 0));
    CHECK_THAT(prod12.k_model, WithinAbs(7235.0 / 7392.0, 1e-12));

    CHECK_THROWS_AS(evaluate(printed_model(6), make_ghz(4)), std::invalid_argument);
}

TEST_CASE("Identity verification", "[decomposition]") {
    const auto four = verify_identity(4, 100, 1, 1e-9, printed_model(4));
    CHECK(four.passed);
    CHECK(four.states.size() == 103);
    CHECK(four.max_abs_residual <= 1e-9);
    CHECK(four.min_k >= -1e-9);

    const auto ten = verify_identity(10, 10, 1, 1e-9, printed_model(10));
    CHECK_FALSE(ten.passed);
    CHECK(ten.max_abs_residual >= 0.05);

    const auto two = verify_identity(2, 50, 3, 1e-10, printed_model(2));
    CHECK(two.passed);

    CHECK_THROWS_AS(verify_identity(4, 0, 1, 1e-9, printed_model(4)), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity(6, 5, 1, 1e-9, printed_model(4)), std::invalid_argument);
}

TEST_CASE("Published models hold on reference states", "[decomposition]") {
    for (const int n : {2, 4, 6, 8, 12}) {
        CAPTURE(n);
        const auto model = printed_model(n);
        for (const auto &s : {make_ghz(n), make_basis_state(n, 0), make_w(n)}) {
            const auto rep = evaluate(model, s);
            CHECK(std::abs(rep.residual) <= 1e-9);
            CHECK(rep.k_model >= -1e-9);
        }
    }
}

TEST_CASE("Model residual against the dense oracle", "[decomposition]") {
    auto rng = make_rng(41);
    for (const int n : {2, 4, 6}) {
        const auto model = printed_model(n);
        for (int trial = 0; trial < 3; ++trial) {
            const auto s = random_state(n, rng);
            const auto rep = evaluate(model, s);
            CHECK_THAT(rep.pi_me_oracle, WithinAbs(oracle::dense_pi_me(s), 1e-12));
            CHECK_THAT(rep.constant + rep.k_model, WithinAbs(oracle::dense_pi_me(s), 1e-10));
        }
    }
}

TEST_CASE("Four-qubit weight-sum relation", "[decomposition]") {
    // Normalization and purity duality pin M_2 = 2 + M_1 + 4 tau_4.
    auto rng = make_rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_state(4, rng);
        const auto ws = weight_sums(s, 4);
        CHECK_THAT(ws.at(2), WithinAbs(2.0 + ws.at(1) + 4.0 * n_tangle(s), 1e-10));
    }
}

TEST_CASE("Exact K for integer invariants", "[decomposition]") {
    const std::vector<std::int64_t> ghz8{0, 28, 0};
    CHECK(*printed_model(8).exact_k(ghz8, 1) == r(29, 70));
    const std::vector<std::int64_t> prod6{6, 15};
    CHECK(*printed_model(6).exact_k(prod6, 0) == r(7, 8));

    auto approx = printed_model(6);
    approx.constant = Coefficient::approx(0.125);
    CHECK_FALSE(approx.is_exact());
    CHECK_FALSE(approx.exact_k(prod6, 0).has_value());
}

TEST_CASE("Conjecture audit", "[decomposition]") {
    const std::vector<int> ns{2, 4, 6, 8, 10, 12};
    const auto rows = conjecture_audit(ns);
    REQUIRE(rows.size() == 6);
    for (const auto &row : rows) {
        CAPTURE(row.n);
        CHECK(row.consistent);
        CHECK(row.floor_in_bracket);
        CHECK(row.conjectured_tau == (row.n % 4 == 0 ? 0 : 1));
    }
    const std::vector<int> bad{7};
    CHECK_THROWS_AS(conjecture_audit(bad), std::invalid_argument);
}

TEST_CASE("Claimed K values", "[decomposition]") {
    const auto checks = claimed_k_audit();
    REQUIRE(checks.size() == 10);
    for (const auto &c : checks) {
        CAPTURE(c.n, c.state);
        if (c.n <= 10) {
            CHECK(c.claim_matches_oracle);
        } else {
            CHECK_FALSE(c.claim_matches_oracle);
        }
        CHECK(c.model_matches_oracle == (c.n != 10));
    }
}

TEST_CASE("Twelve-qubit table reading", "[decomposition]") {
    const auto checks = twelve_qubit_reading_audit();
    REQUIRE(checks.size() == 2);
    CHECK(checks[0].reading == TwelveQubitReading::FifthGroupIsWeight5);
    CHECK(checks[0].survives);
    CHECK_FALSE(checks[1].survives);
}

TEST_CASE("Eight-qubit candidate state audit", "[decomposition]") {
    const auto a = audit_psi_m8();
    CHECK_THAT(a.raw_norm, WithinAbs(1.0, 1e-12));
    CHECK(a.support_size == 52);
    REQUIRE(a.m.size() == 3);
    CHECK_THAT(a.m[0], WithinAbs(0.2578125, 1e-12));
    CHECK_THAT(a.m[1], WithinAbs(3.125, 1e-12));
    CHECK_THAT(a.m[2], WithinAbs(9.1015625, 1e-12));
    CHECK_THAT(a.tau, WithinAbs(1.0 / 64.0, 1e-12));
    CHECK_FALSE(a.claim_holds);
    CHECK(a.deviations.size() == 4);
    CHECK_THAT(a.printed.residual, WithinAbs(0.0, 1e-12));
}

TEST_CASE("Rational reconstruction", "[decomposition]") {
    CHECK(*snap_rational(5.0 / 2016.0) == r(5, 2016));
    CHECK(*snap_rational(-1.0 / 252.0) == r(-1, 252));
    CHECK(*snap_rational(157.0 / 7392.0) == r(157, 7392));
    CHECK(*snap_rational(0.0) == r(0, 1));
    CHECK(*snap_rational(3.0) == r(3, 1));
    CHECK_FALSE(snap_rational(std::sqrt(2.0), 1000, 1e-12).has_value());
    CHECK_FALSE(snap_rational(std::nan(""), 1000).has_value());

    CHECK(parse_rational("13/336") == r(13, 336));
    CHECK(parse_rational("-2") == r(-2, 1));
    CHECK(to_string(r(2, 2016)) == "1/1008");
    CHECK(to_string(r(4, 1)) == "4");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}
