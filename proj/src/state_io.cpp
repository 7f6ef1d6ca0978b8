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
#include "mmeslab/state_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace mmeslab {

using nlohmann::json;

json state_to_json(const QState &state) {
    json amps = json::array();
    for (const auto &a : state.amplitudes()) {
        amps.push_back(json::array({a.real(), a.imag()}));
    }
    return json{{"format", kStateFormat},
                {"n", state.num_qubits()},
                {"amplitudes", std::move(amps)}};
}

LoadedState state_from_json(const json &doc, LoadOptions opts) {
    if (!doc.is_object()) {
        throw StateFormatError("state document must be an object");
    }
    if (!doc.contains("format") || doc["format"] != kStateFormat) {
        throw StateFormatError(std::string("missing or unknown format tag, expected ") +
                               kStateFormat);
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw StateFormatError("field 'n' must be an integer");
    }
    const auto n = doc["n"].get<long long>();
    if (n < 1 || n > kMaxQubits) {
        throw StateFormatError("qubit count " + std::to_string(n) +
                               " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
        throw StateFormatError("field 'amplitudes' must be an array");
    }
    const auto &arr = doc["amplitudes"];
    const std::size_t expected = std::size_t{1} << n;
    if (arr.size() != expected) {
        throw StateFormatError("expected " + std::to_string(expected) +
                               " amplitudes for n=" + std::to_string(n) + ", got " +
                               std::to_string(arr.size()));
    }
    std::vector<Complex> amps;
    amps.reserve(expected);
    for (const auto &entry : arr) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw StateFormatError("each amplitude must be a [re, im] pair of numbers");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }

    double norm2 = 0.0;
    for (const auto &a : amps) {
        norm2 += std::norm(a);
    }
    if (!std::isfinite(norm2)) {
        throw StateFormatError("amplitudes are not finite");
    }
    const int nq = static_cast<int>(n);
    std::vector<std::string> warnings;
    const double dev = std::abs(std::sqrt(norm2) - 1.0);
    if (dev > kLoadNormTolerance) {
        if (!opts.renormalize) {
            throw StateFormatError("state norm " + std::to_string(std::sqrt(norm2)) +
                                   " deviates from 1 by more than 1e-6");
        }
        if (norm2 == 0.0) {
            throw StateFormatError("cannot renormalize a zero vector");
        }
        std::ostringstream msg;
        msg.precision(17);
        msg << "state norm " << std::sqrt(norm2) << " rescaled to 1";
        warnings.push_back(msg.str());
    }
    // Values already normalized to working precision are kept bit-exact.
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        return {QState::from_unnormalized(nq, std::move(amps)), std::move(warnings)};
    }
    return {QState(nq, std::move(amps)), std::move(warnings)};
}

void write_file_atomic(const std::filesystem::path &path, const std::string &text) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        os << text;
        os.flush();
        if (!os) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot move " + tmp.string() + " into place");
    }
}

void save_state(const QState &state, const std::filesystem::path &path) {
    write_file_atomic(path, state_to_json(state).dump(1) + "\n");
}

LoadedState load_state(const std::filesystem::path &path, LoadOptions opts) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw StateFormatError("cannot open state file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(is);
    } catch (const json::parse_error &e) {
        throw StateFormatError("malformed state file " + path.string() + ": " +
                               e.what());
    }
    return state_from_json(doc, opts);
}

} // namespace mmeslab
