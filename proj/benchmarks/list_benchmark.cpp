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

// Micro benchmarks for the list kernel and market replay.
//
// Build in Release mode; the top-level project defaults to it.

#include <benchmark/benchmark.h>

#include "market/instance_gen.hpp"
#include "market/list_ops.hpp"
#include "market/market.hpp"

namespace {

market::ConsList<market::Nat> make_list(market::Nat n) {
  market::ConsListBuilder<market::Nat> builder;
  for (market::Nat i = 0; i < n; ++i) builder.push_back(i);
  return std::move(builder).finish();
}

void BM_LengthTr(benchmark::State& state) {
  const auto list = make_list(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(market::length_tr(list));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LengthTr)->Range(1 << 8, 1 << 16);

void BM_LengthFl(benchmark::State& state) {
  const auto list = make_list(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(market::length_fl(list));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LengthFl)->Range(1 << 8, 1 << 16);

// Naive recursion; kept to small sizes.
void BM_LengthDef(benchmark::State& state) {
  const auto list = make_list(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(market::length_def(list));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LengthDef)->Range(1 << 8, 1 << 12);

void BM_SetMiddle(benchmark::State& state) {
  const auto list = make_list(state.range(0));
  const market::Nat middle = state.range(0) / 2;
  for (auto _ : state) {
    auto updated = market::set(list, middle, market::Nat{7});
    benchmark::DoNotOptimize(updated);
  }
}
BENCHMARK(BM_SetMiddle)->Range(1 << 8, 1 << 16);

void BM_SetDefMiddle(benchmark::State& state) {
  const auto list = make_list(state.range(0));
  const market::Nat middle = state.range(0) / 2;
  for (auto _ : state) {
    auto updated = market::set_def(list, middle, market::Nat{7});
    benchmark::DoNotOptimize(updated);
  }
}
BENCHMARK(BM_SetDefMiddle)->Range(1 << 8, 1 << 12);

void BM_Replay(benchmark::State& state) {
  const market::Nat users = state.range(0);
  const auto doc = market::generate(
      {.users = users, .items = 8 * users, .transactions = 4096, .seed = 1});
  for (auto _ : state) {
    auto report = market::run_script(market::Market{}, doc.operations,
                                     market::ReplayMode::kLenient);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_Replay)->RangeMultiplier(4)->Range(1, 256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
