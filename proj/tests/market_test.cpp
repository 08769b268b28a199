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

#include "market/market.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "market/instance_gen.hpp"
#include "market/list_ops.hpp"
#include "support/generators.hpp"
#include "support/reference_market.hpp"

namespace market {
namespace {

using testing::random_market;
using testing::random_operation;
using testing::Rng;
using testing::uniform;

Market make(std::initializer_list<Money> accounts,
            std::initializer_list<Item> items) {
  return Market{ConsList<Money>(accounts), ConsList<Item>(items)};
}

TEST(Deposit, DeclaresAndCredits) {
  EXPECT_EQ(deposit(Market{}, 0, 100), make({100}, {}));
  EXPECT_EQ(deposit(make({100}, {}), 0, 50), make({150}, {}));
  EXPECT_EQ(deposit(make({100}, {}), 1, 0), make({100, 0}, {}));
  EXPECT_EQ(deposit(make({100}, {}), 2, 50).error(),
            MarketError::kUserIndexGap);
}

TEST(Assign, DeclaresAndReassigns) {
  EXPECT_EQ(assign(make({100}, {}), 0, 0), make({100}, {{0, 0}}));
  EXPECT_EQ(assign(make({100, 50}, {{0, 30}}), 0, 1),
            make({100, 50}, {{1, 0}}));
  EXPECT_EQ(assign(Market{}, 0, 0).error(), MarketError::kUnknownUser);
  EXPECT_EQ(assign(make({100}, {}), 1, 0).error(), MarketError::kItemIndexGap);
}

TEST(Price, AdvertisesAndHides) {
  EXPECT_EQ(price(make({1}, {{0, 0}}), 0, 25), make({1}, {{0, 25}}));
  EXPECT_EQ(price(make({1}, {{0, 25}}), 0, 0), make({1}, {{0, 0}}));
  EXPECT_EQ(price(make({1}, {}), 0, 10).error(), MarketError::kUnknownItem);
}

TEST(Sell, TransfersItemAndMoney) {
  EXPECT_EQ(sell(make({100, 50}, {{0, 30}}), 0, 1),
            make({130, 20}, {{1, 0}}));
}

TEST(Sell, SelfSaleIsNetZeroButHidesItem) {
  EXPECT_EQ(sell(make({100}, {{0, 30}}), 0, 0), make({100}, {{0, 0}}));
}

TEST(Sell, ExactBalanceIsEnough) {
  EXPECT_EQ(sell(make({0, 30}, {{0, 30}}), 0, 1), make({30, 0}, {{1, 0}}));
}

TEST(Sell, Errors) {
  EXPECT_EQ(sell(make({100, 50}, {{0, 0}}), 0, 1).error(),
            MarketError::kNotAdvertised);
  EXPECT_EQ(sell(make({100, 50}, {{0, 30}}), 1, 1).error(),
            MarketError::kUnknownItem);
  EXPECT_EQ(sell(make({100, 50}, {{0, 30}}), 0, 2).error(),
            MarketError::kUnknownUser);
  EXPECT_EQ(sell(make({100, 29}, {{0, 30}}), 0, 1).error(),
            MarketError::kInsufficientFunds);
}

TEST(IsAdvertised, FollowsPrice) {
  const Market m = make({1}, {{0, 25}, {0, 0}});
  EXPECT_TRUE(*is_advertised(m, 0));
  EXPECT_FALSE(*is_advertised(m, 1));
  EXPECT_EQ(is_advertised(m, 2).error(), MarketError::kUnknownItem);
}

TEST(TotalMoney, SumsAccounts) {
  EXPECT_EQ(total_money(Market{}), 0u);
  EXPECT_EQ(total_money(make({100, 50}, {})), 150u);
}

TEST(ApplyOperation, Dispatches) {
  const Market m = make({100, 50}, {{0, 30}});
  EXPECT_EQ(apply_operation(m, Deposit{0, 5}), deposit(m, 0, 5));
  EXPECT_EQ(apply_operation(m, Assign{0, 1}), assign(m, 0, 1));
  EXPECT_EQ(apply_operation(m, Price{0, 7}), price(m, 0, 7));
  EXPECT_EQ(apply_operation(m, Sell{0, 1}), sell(m, 0, 1));
  EXPECT_EQ(apply_operation(m, Sell{3, 1}), sell(m, 3, 1));
}

TEST(RunScript, Empty) {
  const ReplayReport r = run_script(Market{}, {}, ReplayMode::kStrict);
  EXPECT_EQ(r.market, Market{});
  EXPECT_EQ(r.operations_total, 0u);
  EXPECT_TRUE(r.failures.empty());
}

TEST(RunScript, HandTrace) {
  const std::vector<Operation> ops{Deposit{0, 100}, Assign{0, 0}, Price{0, 30},
                                   Deposit{1, 100}, Sell{0, 1}};
  for (auto mode : {ReplayMode::kStrict, ReplayMode::kLenient}) {
    const ReplayReport r = run_script(Market{}, ops, mode);
    EXPECT_EQ(r.market, make({130, 70}, {{1, 0}}));
    EXPECT_TRUE(r.failures.empty());
    EXPECT_EQ(r.operations_applied, 5u);
    EXPECT_EQ(r.sell_count, 1u);
    EXPECT_FALSE(r.aborted);
  }
}

TEST(RunScript, LenientRecordsAndContinues) {
  const std::vector<Operation> ops{Deposit{0, 100}, Assign{0, 0}, Sell{0, 0},
                                   Price{0, 10}, Deposit{0, 1}};
  const ReplayReport r = run_script(Market{}, ops, ReplayMode::kLenient);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0], (Failure{2, MarketError::kNotAdvertised}));
  EXPECT_EQ(r.market, make({101}, {{0, 10}}));
  EXPECT_EQ(r.operations_applied, 4u);
  EXPECT_EQ(r.sell_count, 0u);
}

TEST(RunScript, StrictStopsAtFirstFailure) {
  const std::vector<Operation> ops{Deposit{0, 100}, Assign{0, 0}, Sell{0, 0},
                                   Price{0, 10}};
  const ReplayReport r = run_script(Market{}, ops, ReplayMode::kStrict);
  EXPECT_TRUE(r.aborted);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].index, 2u);
  EXPECT_EQ(r.market, make({100}, {{0, 0}}));
}

TEST(RunScript, MatchesReferenceExecutor) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    testing::ReferenceMarket reference;
    std::vector<Operation> ops;
    for (int i = 0; i < 80; ++i) {
      ops.push_back(random_operation(rng, reference.accounts.size(),
                                     reference.items.size()));
      reference.apply(ops.back());
    }
    const ReplayReport r = run_script(Market{}, ops, ReplayMode::kLenient);
    ASSERT_EQ(r.market, reference.freeze());
  }
  const ScriptDocument doc = generate({.users = 5, .items = 9, .transactions = 300, .seed = 4});
  testing::ReferenceMarket reference;
  for (const Operation& op : doc.operations) ASSERT_FALSE(reference.apply(op));
  EXPECT_EQ(run_script(Market{}, doc.operations, ReplayMode::kStrict).market,
            reference.freeze());
}

// Conservation properties over random markets and operations.
TEST(MarketInvariants, RandomOperations) {
  Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const Market m = random_market(rng);
    ASSERT_TRUE(well_formed(m));
    const Market snapshot{
        ConsList<Money>::from_range(std::vector<Money>(m.accounts.begin(), m.accounts.end())),
        ConsList<Item>::from_range(std::vector<Item>(m.items.begin(), m.items.end()))};
    const Nat users = length(m.accounts);
    const Nat items = length(m.items);
    for (int step = 0; step < 20; ++step) {
      const Operation op = random_operation(rng, users, items);
      const MarketResult r = apply_operation(m, op);
      ASSERT_EQ(r, apply_operation(snapshot, op));
      ASSERT_EQ(m, snapshot);
      if (!r) continue;
      const Market& next = *r;
      ASSERT_TRUE(well_formed(next));
      const Nat users_after = length(next.accounts);
      const Nat items_after = length(next.items);
      if (const auto* d = std::get_if<Deposit>(&op)) {
        ASSERT_EQ(users_after, users + (d->user == users ? 1 : 0));
        ASSERT_EQ(items_after, items);
        ASSERT_EQ(total_money(next), total_money(m) + d->amount);
      } else if (const auto* a = std::get_if<Assign>(&op)) {
        ASSERT_EQ(users_after, users);
        ASSERT_EQ(items_after, items + (a->item == items ? 1 : 0));
        ASSERT_EQ(total_money(next), total_money(m));
      } else {
        ASSERT_EQ(users_after, users);
        ASSERT_EQ(items_after, items);
        ASSERT_EQ(total_money(next), total_money(m));
      }
      if (const auto* s = std::get_if<Sell>(&op)) {
        const Item before = *get(m.items, s->item);
        const Item after = *get(next.items, s->item);
        ASSERT_EQ(after, (Item{s->buyer, 0}));
        ASSERT_FALSE(*is_advertised(next, s->item));
        if (s->buyer != before.owner) {
          ASSERT_EQ(*get(next.accounts, s->buyer),
                    *get(m.accounts, s->buyer) - before.price);
          ASSERT_EQ(*get(next.accounts, before.owner),
                    *get(m.accounts, before.owner) + before.price);
        } else {
          ASSERT_EQ(next.accounts, m.accounts);
        }
      }
    }
  }
}

}  // namespace
}  // namespace market
