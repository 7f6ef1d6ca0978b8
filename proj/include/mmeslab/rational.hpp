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
 * Exact rational coefficients and continued-fraction reconstruction of
 * rationals from floating-point estimates.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace mmeslab {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational &r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational &r);

/// Parses "p/q" or "p". Throws std::invalid_argument.
Rational parse_rational(const std::string &text);

/// Walks the continued-fraction convergents of `x` and returns the first
/// one within `tol` of `x` whose denominator does not exceed `max_den`.
std::optional<Rational> snap_rational(double x, std::int64_t max_den = 1'000'000,
                                      double tol = 1e-9);

} // namespace mmeslab
