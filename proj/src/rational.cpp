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
#include "mmeslab/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace mmeslab {

std::string to_string(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string &text) {
    try {
        const auto slash = text.find('/');
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const auto p = std::stoll(text, &used);
            if (used != text.size()) {
                throw std::invalid_argument(text);
            }
            return Rational(p);
        }
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        const auto p = std::stoll(num, &used);
        if (used != num.size()) {
            throw std::invalid_argument(text);
        }
        const auto q = std::stoll(den, &used);
        if (used != den.size() || q == 0) {
            throw std::invalid_argument(text);
        }
        return Rational(p, q);
    } catch (const std::logic_error &) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

std::optional<Rational> snap_rational(double x, std::int64_t max_den, double tol) {
    if (!std::isfinite(x) || std::abs(x) > 1e12) {
        return std::nullopt;
    }
    // h/k convergents: h_i = a_i h_{i-1} + h_{i-2}.
    std::int64_t h_prev = 1;
    std::int64_t h_prev2 = 0;
    std::int64_t k_prev = 0;
    std::int64_t k_prev2 = 1;
    double rem = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double a_f = std::floor(rem);
        const auto a = static_cast<std::int64_t>(a_f);
        const std::int64_t h = a * h_prev + h_prev2;
        const std::int64_t k = a * k_prev + k_prev2;
        if (k > max_den) {
            return std::nullopt;
        }
        if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol) {
            return Rational(h, k);
        }
        const double frac = rem - a_f;
        if (frac <= 0.0) {
            return std::nullopt;
        }
        rem = 1.0 / frac;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    return std::nullopt;
}

} // namespace mmeslab
