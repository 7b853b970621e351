// Copyright 2026 The falqon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace falqon::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kRuntimeFailure = 1, kUsageError = 2 };

/// Default output directory when neither --out nor the config sets one.
inline constexpr const char *kOutDirEnv = "FALQON_OUT_DIR";

/**
 * Entry point shared by the executable and the tests.
 *
 * `args` excludes the program name, e.g. {"run", "--config", "c.json"}.
 * Subcommands: graph, run, sweep, bound.
 */
int main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace falqon::cli
