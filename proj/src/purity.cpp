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
#include "mmeslab/purity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace mmeslab {

namespace detail {

namespace {

struct Reshaped {
    std::vector<std::uint32_t> rows;
    std::vector<std::uint32_t> cols;
    Eigen::MatrixXcd mat;
};

// Row index from the bits of `mask`, column index from the complement, both
// in ascending position order.
Reshaped reshape(std::span<const Complex> amps, int n, std::uint32_t mask) {
    const std::uint32_t full = (1U << n) - 1U;
    Reshaped r{submasks(mask), submasks(~mask & full), {}};
    r.mat.resize(static_cast<Eigen::Index>(r.rows.size()),
                 static_cast<Eigen::Index>(r.cols.size()));
    for (std::size_t v = 0; v < r.cols.size(); ++v) {
        for (std::size_t u = 0; u < r.rows.size(); ++u) {
            r.mat(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) =
                amps[r.rows[u] | r.cols[v]];
        }
    }
    return r;
}

void check_register(std::span<const Complex> amps, int n) {
    check_qubit_count(n);
    if (amps.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("amplitude count does not match 2^n");
    }
}

} // namespace

std::vector<std::uint32_t> submasks(std::uint32_t mask) {
    std::vector<std::uint32_t> out;
    out.reserve(std::size_t{1} << std::popcount(mask));
    std::uint32_t s = 0;
    do {
        out.push_back(s);
        s = (s - mask) & mask;
    } while (s != 0U);
    return out;
}

double subset_purity(std::span<const Complex> amps, int n, std::uint32_t mask) {
    check_register(amps, n);
    const auto r = reshape(amps, n, mask);
    // Smaller Gram matrix: M M^H is rho_A, M^H M is rho_B^T; same spectrum.
    if (r.mat.rows() <= r.mat.cols()) {
        const Eigen::MatrixXcd g = r.mat * r.mat.adjoint();
        return g.squaredNorm();
    }
    const Eigen::MatrixXcd g = r.mat.adjoint() * r.mat;
    return g.squaredNorm();
}

double subset_purity_with_gradient(std::span<const Complex> amps, int n,
                                   std::uint32_t mask, double weight,
                                   std::span<Complex> grad) {
    check_register(amps, n);
    if (grad.size() != amps.size()) {
        throw std::invalid_argument("gradient buffer has the wrong size");
    }
    const auto r = reshape(amps, n, mask);
    Eigen::MatrixXcd mmm;
    double purity = 0.0;
    if (r.mat.rows() <= r.mat.cols()) {
        const Eigen::MatrixXcd g = r.mat * r.mat.adjoint();
        purity = g.squaredNorm();
        mmm.noalias() = g * r.mat;
    } else {
        const Eigen::MatrixXcd g = r.mat.adjoint() * r.mat;
        purity = g.squaredNorm();
        mmm.noalias() = r.mat * g;
    }
    const double scale = 4.0 * weight;
    for (std::size_t v = 0; v < r.cols.size(); ++v) {
        for (std::size_t u = 0; u < r.rows.size(); ++u) {
            grad[r.rows[u] | r.cols[v]] +=
                scale * mmm(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
        }
    }
    return purity;
}

double average_balanced_purity_raw(std::span<const Complex> amps, int n,
                                   std::span<Complex> grad) {
    check_register(amps, n);
    if (n < 2) {
        throw std::invalid_argument("balanced bipartitions need at least 2 qubits");
    }
    const int half = n / 2;
    // For even n, pi_A = pi_complement(A) holds exactly for any vector, so the
    // subsets containing qubit 1 carry the full average.
    std::vector<QubitSet> parts;
    for (const auto &s : subsets_of_size(n, half)) {
        if (n % 2 == 1 || s.contains(1)) {
            parts.push_back(s);
        }
    }
    const double weight = 1.0 / static_cast<double>(parts.size());
    const bool want_grad = !grad.empty();
    if (want_grad) {
        std::fill(grad.begin(), grad.end(), Complex{0.0, 0.0});
    }
    double acc = 0.0;
    for (const auto &s : parts) {
        acc += want_grad ? subset_purity_with_gradient(amps, n, s.mask(), weight, grad)
                         : subset_purity(amps, n, s.mask());
    }
    return acc * weight;
}

} // namespace detail

namespace {

double checked_purity(double p) {
    if (!(p >= -kPurityTolerance && p <= 1.0 + kPurityTolerance)) {
        throw std::runtime_error("purity " + std::to_string(p) +
                                 " outside [0, 1]; kernel or normalization error");
    }
    return std::clamp(p, 0.0, 1.0);
}

} // namespace

double reduced_purity(const QState &state, const QubitSet &part_a) {
    const int n = state.num_qubits();
    if (part_a.num_qubits() != n) {
        throw std::invalid_argument("subset and state have different qubit counts");
    }
    if (part_a.empty() || part_a.size() == n) {
        throw std::invalid_argument("bipartition part must be a nonempty proper subset");
    }
    return checked_purity(detail::subset_purity(state.amplitudes(), n, part_a.mask()));
}

PurityReport average_balanced_purity(const QState &state) {
    const int n = state.num_qubits();
    if (n < 2) {
        throw std::invalid_argument("balanced bipartitions need at least 2 qubits");
    }
    PurityReport rep;
    rep.n = n;
    rep.part_size = n / 2;
    rep.parts = subsets_of_size(n, rep.part_size);
    rep.purities.assign(rep.parts.size(), 0.0);

    const bool mirror = n % 2 == 0;
    const auto count = static_cast<std::int64_t>(rep.parts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < count; ++s) {
        const auto &part = rep.parts[static_cast<std::size_t>(s)];
        if (!mirror || part.contains(1)) {
            rep.purities[static_cast<std::size_t>(s)] = reduced_purity(state, part);
        }
    }
    if (mirror) {
        // Lexicographic order puts complements at mirrored indices:
        // parts[i].complement() == parts[count - 1 - i].
        for (std::size_t s = 0; s < rep.parts.size(); ++s) {
            if (!rep.parts[s].contains(1)) {
                rep.purities[s] = rep.purities[rep.parts.size() - 1 - s];
            }
        }
    }

    double acc = 0.0;
    for (const double p : rep.purities) {
        acc += p;
    }
    rep.mean = acc / static_cast<double>(rep.purities.size());
    rep.min = *std::min_element(rep.purities.begin(), rep.purities.end());
    rep.max = *std::max_element(rep.purities.begin(), rep.purities.end());
    return rep;
}

} // namespace mmeslab
