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
 * `mmeslab-report-v1` documents. Every command writes exactly one:
 *
 *     { "format": "mmeslab-report-v1",
 *       "command": { "name": ..., "argv": [...] },
 *       "inputs": {...}, "results": {...}, "errata": [...] }
 *
 * Doubles are written in shortest round-trip form (17 significant digits
 * whenever the value needs them).
 */
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mmeslab/decomposition.hpp"
#include "mmeslab/pauli.hpp"
#include "mmeslab/purity.hpp"
#include "mmeslab/search.hpp"

namespace mmeslab {

inline constexpr const char *kReportFormat = "mmeslab-report-v1";

using Json = nlohmann::json;

Json make_report(const std::string &command, const std::vector<std::string> &argv);

/// Empty when `doc` has the report envelope with the expected member types.
std::vector<std::string> report_schema_errors(const Json &doc);

Json rational_json(const Rational &r);
Json to_json(const Coefficient &c);
Json to_json(const WeightSums &w);
Json to_json(const PurityReport &p, bool with_values = true);
Json to_json(const DecompositionModel &m);
Json to_json(const KReport &k);
Json to_json(const VerifySummary &v, bool with_states = true);
Json to_json(const FitResult &f);
Json to_json(const ConjectureRow &row);
Json to_json(const ClaimCheck &c);
Json to_json(const ReadingCheck &c);
Json to_json(const PsiM8Audit &a);
Json to_json(const SearchResult &s);

std::string to_string(TwelveQubitReading reading);

} // namespace mmeslab
