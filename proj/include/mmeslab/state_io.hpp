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
 * Reading and writing `mmeslab-state-v1` documents:
 *
 *     { "format": "mmeslab-state-v1", "n": 4, "amplitudes": [[re, im], ...] }
 *
 * Amplitudes are listed in basis-index order. Doubles are written in their
 * shortest round-trip form, so save(load(f)) reproduces every value exactly.
 */
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmeslab/state.hpp"

namespace mmeslab {

inline constexpr const char *kStateFormat = "mmeslab-state-v1";

/// Files from other tools may carry rounding noise; anything within this of
/// unit norm is accepted.
inline constexpr double kLoadNormTolerance = 1e-6;

class StateFormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct LoadOptions {
    /// Accept any nonzero norm and rescale, reporting a warning.
    bool renormalize = false;
};

struct LoadedState {
    QState state;
    std::vector<std::string> warnings;
};

nlohmann::json state_to_json(const QState &state);
LoadedState state_from_json(const nlohmann::json &doc, LoadOptions opts = {});

/// Writes through a temporary file in the same directory and renames it into
/// place, so a failed write never leaves a partial file behind.
void save_state(const QState &state, const std::filesystem::path &path);
LoadedState load_state(const std::filesystem::path &path, LoadOptions opts = {});

/// Atomic text write used by every file-producing command.
void write_file_atomic(const std::filesystem::path &path, const std::string &text);

} // namespace mmeslab
