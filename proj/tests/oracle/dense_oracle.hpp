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
 * Brute-force reference implementations for small registers. Operators are
 * built as dense Kronecker products and reduced states by explicit partial
 * trace, so nothing here shares code with the library kernels.
 */
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mmeslab/state.hpp"

namespace mmeslab::oracle {

inline Eigen::Matrix2cd pauli_matrix(char c) {
    using C = std::complex<double>;
    Eigen::Matrix2cd m;
    switch (c) {
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, C(0, -1), C(0, 1), 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        m << 1, 0, 0, 1;
    }
    return m;
}

/// Dense operator for "XIZY"-style strings, qubit 1 leftmost in the
/// Kronecker product.
inline Eigen::MatrixXcd dense_pauli(const std::string &s) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (const char c : s) {
        const Eigen::Matrix2cd p = pauli_matrix(c);
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index i = 0; i < out.rows(); ++i) {
            for (Eigen::Index j = 0; j < out.cols(); ++j) {
                next.block(2 * i, 2 * j, 2, 2) = out(i, j) * p;
            }
        }
        out = next;
    }
    return out;
}

inline Eigen::VectorXcd to_vector(const QState &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s[i];
    }
    return v;
}

inline double dense_expectation(const QState &s, const std::string &p) {
    const auto v = to_vector(s);
    return (v.adjoint() * dense_pauli(p) * v)(0, 0).real();
}

/// rho_A for the 1-based positions `part` (ascending), by summing over every
/// configuration of the remaining qubits.
inline Eigen::MatrixXcd dense_reduced(const QState &s, const std::vector<int> &part) {
    const int n = s.num_qubits();
    const int a = static_cast<int>(part.size());
    std::vector<int> rest;
    for (int k = 1; k <= n; ++k) {
        bool in = false;
        for (const int p : part) {
            in = in || p == k;
        }
        if (!in) {
            rest.push_back(k);
        }
    }
    auto index = [&](int ia, int ib) {
        // Assemble the basis state qubit by qubit.
        std::vector<int> bits(static_cast<std::size_t>(n) + 1, 0);
        for (int j = 0; j < a; ++j) {
            bits[static_cast<std::size_t>(part[static_cast<std::size_t>(j)])] = (ia >> (a - 1 - j)) & 1;
        }
        const int b = static_cast<int>(rest.size());
        for (int j = 0; j < b; ++j) {
            bits[static_cast<std::size_t>(rest[static_cast<std::size_t>(j)])] = (ib >> (b - 1 - j)) & 1;
        }
        std::size_t idx = 0;
        for (int k = 1; k <= n; ++k) {
            idx = idx * 2 + static_cast<std::size_t>(bits[static_cast<std::size_t>(k)]);
        }
        return idx;
    };
    const int da = 1 << a;
    const int db = 1 << static_cast<int>(rest.size());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(da, da);
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) {
            std::complex<double> acc = 0.0;
            for (int r = 0; r < db; ++r) {
                acc += s[index(i, r)] * std::conj(s[index(j, r)]);
            }
            rho(i, j) = acc;
        }
    }
    return rho;
}

inline double dense_purity(const QState &s, const std::vector<int> &part) {
    const auto rho = dense_reduced(s, part);
    return (rho * rho).trace().real();
}

/// Average over every floor(n/2)-subset, enumerated by bit patterns.
inline double dense_pi_me(const QState &s) {
    const int n = s.num_qubits();
    double acc = 0.0;
    int count = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> part;
        for (int k = 1; k <= n; ++k) {
            if ((mask >> (k - 1)) & 1) {
                part.push_back(k);
            }
        }
        if (static_cast<int>(part.size()) != n / 2) {
            continue;
        }
        acc += dense_purity(s, part);
        ++count;
    }
    return acc / count;
}

/// F_S by looping over every x/y/z lettering of `part`.
inline double dense_f(const QState &s, const std::vector<int> &part) {
    const int n = s.num_qubits();
    const int k = static_cast<int>(part.size());
    int total = 1;
    for (int j = 0; j < k; ++j) {
        total *= 3;
    }
    double acc = 0.0;
    for (int code = 0; code < total; ++code) {
        std::string p(static_cast<std::size_t>(n), 'I');
        int c = code;
        for (int j = 0; j < k; ++j) {
            p[static_cast<std::size_t>(part[static_cast<std::size_t>(j)] - 1)] = "XYZ"[c % 3];
            c /= 3;
        }
        const double e = dense_expectation(s, p);
        acc += e * e;
    }
    return acc;
}

inline double dense_weight_sum(const QState &s, int k) {
    const int n = s.num_qubits();
    double acc = 0.0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> part;
        for (int q = 1; q <= n; ++q) {
            if ((mask >> (q - 1)) & 1) {
                part.push_back(q);
            }
        }
        if (static_cast<int>(part.size()) == k) {
            acc += dense_f(s, part);
        }
    }
    return acc;
}

inline double dense_tangle(const QState &s) {
    const auto v = to_vector(s);
    const auto y = dense_pauli(std::string(static_cast<std::size_t>(s.num_qubits()), 'Y'));
    return std::norm((v.adjoint() * y * v.conjugate())(0, 0));
}

} // namespace mmeslab::oracle
