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

#include "market/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

#include "market/list_ops.hpp"

namespace market::cli {

namespace {

std::string seconds(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string rate(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

}  // namespace

RunReport summarize(const ReplayReport& replay) {
  RunReport report;
  report.users_declared = length(replay.market.accounts);
  report.items_declared = length(replay.market.items);
  report.operations_total = replay.operations_total;
  report.sell_count = replay.sell_count;
  report.failures = replay.failures;
  report.final_total_money = total_money(replay.market);
  return report;
}

double per_second(Nat count, double seconds) {
  return seconds > 0 ? static_cast<double>(count) / seconds : 0.0;
}

void write_report(std::ostream& os, const RunReport& r) {
  os << "users_declared: " << r.users_declared << '\n'
     << "items_declared: " << r.items_declared << '\n'
     << "operations_total: " << r.operations_total << '\n'
     << "sell_count: " << r.sell_count << '\n';
  if (r.failures.empty()) {
    os << "failures: []\n";
  } else {
    os << "failures:\n";
    for (const Failure& f : r.failures) {
      os << "  - index: " << f.index << '\n'
         << "    error: " << to_string(f.error) << '\n';
    }
  }
  os << "parse_time_s: " << seconds(r.parse_time_s) << '\n'
     << "exec_time_s: " << seconds(r.exec_time_s) << '\n'
     << "total_time_s: " << seconds(r.total_time_s) << '\n'
     << "transactions_per_s: " << rate(r.transactions_per_s) << '\n'
     << "final_total_money: " << r.final_total_money << '\n';
}

double median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2;
}

BenchSummary summarize_bench(std::span<const RunReport> runs) {
  BenchSummary s;
  s.repetitions = runs.size();
  if (runs.empty()) return s;
  std::vector<double> times;
  times.reserve(runs.size());
  for (const RunReport& r : runs) times.push_back(r.exec_time_s);
  s.exec_time_s_min = *std::min_element(times.begin(), times.end());
  s.exec_time_s_median = median(times);
  const Nat sells = runs.front().sell_count;
  s.transactions_per_s_min_time = per_second(sells, s.exec_time_s_min);
  s.transactions_per_s_median = per_second(sells, s.exec_time_s_median);
  return s;
}

void write_summary(std::ostream& os, const BenchSummary& s) {
  os << "repetitions: " << s.repetitions << '\n'
     << "exec_time_s_min: " << seconds(s.exec_time_s_min) << '\n'
     << "exec_time_s_median: " << seconds(s.exec_time_s_median) << '\n'
     << "transactions_per_s_min_time: " << rate(s.transactions_per_s_min_time)
     << '\n'
     << "transactions_per_s_median: " << rate(s.transactions_per_s_median)
     << '\n';
}

}  // namespace market::cli
