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

#include "market/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>

#include "market/market.hpp"
#include "market/script_io.hpp"

namespace market::cli {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int cmd_generate(const GenParams& params, const std::filesystem::path& output,
                 std::ostream& err) {
  if (!valid(params)) {
    err << "error: --users and --items must be at least 1\n";
    return kExitAbort;
  }
  const std::string text = serialize_script(generate(params));
  std::ofstream file(output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open " << output << " for writing\n";
    return kExitFailures;
  }
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.close();
  if (!file) {
    err << "error: failed writing " << output << '\n';
    return kExitFailures;
  }
  return kExitOk;
}

int cmd_run(const std::filesystem::path& input, bool strict, std::ostream& out,
            std::ostream& err) {
  const auto start = Clock::now();
  std::ifstream file(input, std::ios::binary);
  if (!file) {
    err << "error: cannot read " << input << '\n';
    return kExitAbort;
  }
  const std::string text{std::istreambuf_iterator<char>(file),
                         std::istreambuf_iterator<char>()};

  const auto parse_start = Clock::now();
  auto doc = parse_script(text);
  const double parse_time = since(parse_start);
  if (!doc) {
    err << input.string() << ": " << describe(doc.error()) << '\n';
    return kExitAbort;
  }

  const auto exec_start = Clock::now();
  ReplayReport replay =
      run_script(Market{}, doc->operations,
                 strict ? ReplayMode::kStrict : ReplayMode::kLenient);
  const double exec_time = since(exec_start);

  RunReport report = summarize(replay);
  report.parse_time_s = parse_time;
  report.exec_time_s = exec_time;
  report.transactions_per_s = per_second(report.sell_count, exec_time);
  report.total_time_s = since(start);
  write_report(out, report);

  if (replay.aborted) {
    const Failure& f = replay.failures.back();
    err << "error: operation " << f.index << " failed: " << to_string(f.error)
        << '\n';
    return kExitAbort;
  }
  return replay.failures.empty() ? kExitOk : kExitFailures;
}

std::vector<RunReport> bench(const GenParams& params, Nat repeat) {
  const ScriptDocument doc = generate(params);
  std::vector<RunReport> runs;
  runs.reserve(repeat);
  for (Nat rep = 0; rep < repeat; ++rep) {
    const auto start = Clock::now();
    ReplayReport replay =
        run_script(Market{}, doc.operations, ReplayMode::kLenient);
    const double exec_time = since(start);
    RunReport report = summarize(replay);
    report.exec_time_s = exec_time;
    report.transactions_per_s = per_second(report.sell_count, exec_time);
    report.total_time_s = since(start);
    runs.push_back(std::move(report));
  }
  return runs;
}

int cmd_bench(const GenParams& params, Nat repeat, std::ostream& out,
              std::ostream& err) {
  if (!valid(params)) {
    err << "error: --users and --items must be at least 1\n";
    return kExitAbort;
  }
  const std::vector<RunReport> runs = bench(params, repeat);
  int status = kExitOk;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i > 0) out << "---\n";
    write_report(out, runs[i]);
    if (!runs[i].failures.empty()) {
      err << "error: repetition " << i << " recorded "
          << runs[i].failures.size() << " failed operations\n";
      status = kExitFailures;
    }
  }
  out << "---\n";
  write_summary(out, summarize_bench(runs));
  return status;
}

}  // namespace market::cli
