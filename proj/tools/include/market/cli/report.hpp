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

#include <iosfwd>
#include <span>
#include <vector>

#include "market/market.hpp"

namespace market::cli {

struct RunReport {
  Nat users_declared = 0;
  Nat items_declared = 0;
  Nat operations_total = 0;
  Nat sell_count = 0;
  std::vector<Failure> failures;
  double parse_time_s = 0;
  double exec_time_s = 0;
  double total_time_s = 0;
  // sell_count / exec_time_s; zero when nothing was timed.
  double transactions_per_s = 0;
  Money final_total_money = 0;
};

// Fills everything but the timings from a finished replay.
RunReport summarize(const ReplayReport& replay);

double per_second(Nat count, double seconds);

// One YAML mapping, two-space indentation, keys in declaration order.
void write_report(std::ostream& os, const RunReport& report);

struct BenchSummary {
  Nat repetitions = 0;
  double exec_time_s_min = 0;
  double exec_time_s_median = 0;
  double transactions_per_s_min_time = 0;
  double transactions_per_s_median = 0;
};

BenchSummary summarize_bench(std::span<const RunReport> runs);

void write_summary(std::ostream& os, const BenchSummary& summary);

double median(std::vector<double> values);

}  // namespace market::cli
