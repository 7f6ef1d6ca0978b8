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
 * The `mmeslab` command-line surface. Exit codes: 0 success, 1 a `verify`
 * run that failed its tolerance, 2 invalid arguments or malformed input,
 * 3 internal error.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmeslab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command. `args` excludes the program name. The report document
/// goes to `out`; diagnostics and --pretty tables go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mmeslab
