// Copyright 2026 The Market Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "market/cli/report.hpp"
#include "market/instance_gen.hpp"

namespace market::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitAbort = 2;

// Writes the generated instance to `output`. Returns 0, or 1 on I/O error
// and 2 on invalid parameters.
int cmd_generate(const GenParams& params, const std::filesystem::path& output,
                 std::ostream& err);

// Replays a script from the empty market and prints its report. Returns 0
// with no failures, 1 when lenient replay recorded failures, 2 on read or
// parse errors and on strict-mode aborts.
int cmd_run(const std::filesystem::path& input, bool strict, std::ostream& out,
            std::ostream& err);

// Generates an instance in memory and times `repeat` lenient replays of it.
// Generation is not timed.
std::vector<RunReport> bench(const GenParams& params, Nat repeat);

// bench() printed as one report document per repetition followed by a
// summary document. Returns 1 if any replay recorded a failure.
int cmd_bench(const GenParams& params, Nat repeat, std::ostream& out,
              std::ostream& err);

}  // namespace market::cli
