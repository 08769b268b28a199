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

#include "market/instance_gen.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "market/list_ops.hpp"
#include "market/market.hpp"
#include "support/generators.hpp"

namespace market {
namespace {

// Frozen from tests/oracles/instance_oracle.py.
constexpr std::uint64_t kSeedOneState = 7806831264735756412ULL;
constexpr Nat kSeedOneDraws[] = {908834774, 1093944153, 1392341196, 822192870,
                                 1708211034};

TEST(Prng, FixedRecurrence) {
  const auto [state, value] = prng_next(PrngState{1});
  EXPECT_EQ(state.state, kSeedOneState);
  EXPECT_EQ(state.state, 6364136223846793005ULL + 1442695040888963407ULL);
  EXPECT_EQ(value, kSeedOneState >> 33);

  PrngState s{1};
  for (Nat expected : kSeedOneDraws) {
    auto [next, v] = prng_next(s);
    EXPECT_EQ(v, expected);
    s = next;
  }
}

TEST(Prng, DeterministicAndBounded) {
  PrngState a{12345}, b{12345};
  for (int i = 0; i < 1000; ++i) {
    auto [na, va] = prng_next(a);
    auto [nb, vb] = prng_next(b);
    ASSERT_EQ(va, vb);
    a = na;
    b = nb;
  }
  PrngState s{0};
  for (int i = 0; i < 100'000; ++i) {
    auto [next, v] = prng_next(s);
    ASSERT_LT(v, Nat{1} << 31);
    s = next;
  }
}

TEST(Generate, SmallestInstance) {
  const ScriptDocument doc = generate({.users = 1, .items = 1, .transactions = 0, .seed = 7});
  ASSERT_EQ(doc.operations.size(), 3u);
  EXPECT_EQ(doc.operations[0], (Operation{Deposit{0, 0}}));
  EXPECT_EQ(doc.operations[1], (Operation{Assign{0, 0}}));
  // Oracle value; the generator's contract is only a price in [1, 100].
  EXPECT_EQ(doc.operations[2], (Operation{Price{0, 79}}));
}

TEST(Generate, MatchesGoldenFile) {
  std::ifstream in(MARKET_GOLDEN_DIR "/generated_u2_i3_t4_s42.yaml", std::ios::binary);
  std::ostringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(serialize_script(generate({.users = 2, .items = 3, .transactions = 4, .seed = 42})),
            golden.str());
}

TEST(Generate, OperationCount) {
  const GenParams p{.users = 2, .items = 16, .transactions = 65536, .seed = 3};
  EXPECT_EQ(generate(p).operations.size(), 2u + 32u + 131072u);
  EXPECT_EQ(generated_operation_count(p), 2u + 32u + 131072u);
}

TEST(Generate, RejectsInvalidParams) {
  EXPECT_THROW(generate({.users = 0, .items = 1}), std::invalid_argument);
  EXPECT_THROW(generate({.users = 1, .items = 0}), std::invalid_argument);
}

TEST(Generate, StructureAndPriceRange) {
  const GenParams p{.users = 3, .items = 7, .transactions = 50, .seed = 99};
  const auto ops = generate(p).operations;
  for (Nat u = 0; u < p.users; ++u) {
    ASSERT_EQ(ops[u], (Operation{Deposit{u, 100 * p.transactions}}));
  }
  for (Nat i = 0; i < p.items; ++i) {
    ASSERT_EQ(ops[p.users + 2 * i], (Operation{Assign{i, i % p.users}}));
    const auto& pr = std::get<Price>(ops[p.users + 2 * i + 1]);
    ASSERT_EQ(pr.item, i);
    ASSERT_GE(pr.amount, 1u);
    ASSERT_LE(pr.amount, 100u);
  }
  for (Nat t = 0; t < p.transactions; ++t) {
    const Nat at = p.users + 2 * p.items + 2 * t;
    const auto& s = std::get<Sell>(ops[at]);
    const auto& pr = std::get<Price>(ops[at + 1]);
    ASSERT_LT(s.item, p.items);
    ASSERT_LT(s.buyer, p.users);
    ASSERT_EQ(pr.item, s.item);
    ASSERT_GE(pr.amount, 1u);
    ASSERT_LE(pr.amount, 100u);
  }
}

TEST(Generate, ReplayMatchesOracle) {
  // Final state from the Python oracle's independent replay.
  const auto r = run_script(Market{}, generate({.users = 3, .items = 5, .transactions = 40, .seed = 9}).operations,
                            ReplayMode::kStrict);
  ASSERT_TRUE(r.failures.empty());
  EXPECT_EQ(r.market.accounts, (ConsList<Money>{4164, 3891, 3945}));
  EXPECT_EQ(r.market.items, (ConsList<Item>{{0, 35}, {2, 30}, {1, 83}, {1, 79}, {2, 97}}));
}

TEST(Generate, FeasibleAndConservesMoney) {
  testing::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const GenParams p{.users = testing::uniform(rng, 1, 64),
                      .items = testing::uniform(rng, 1, 64),
                      .transactions = testing::uniform(rng, 0, 1 << 12),
                      .seed = rng()};
    const ScriptDocument doc = generate(p);
    ASSERT_EQ(doc, generate(p));
    ASSERT_EQ(doc.operations.size(), generated_operation_count(p));
    const auto r = run_script(Market{}, doc.operations, ReplayMode::kStrict);
    ASSERT_TRUE(r.failures.empty());
    ASSERT_EQ(total_money(r.market), p.users * 100 * p.transactions);
    ASSERT_EQ(r.sell_count, p.transactions);
  }
}

}  // namespace
}  // namespace market
