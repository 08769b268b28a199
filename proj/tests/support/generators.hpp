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

// Seeded random inputs for property tests.

#include <random>
#include <vector>

#include "market/cons_list.hpp"
#include "market/market.hpp"
#include "market/script_io.hpp"

namespace market::testing {

using Rng = std::mt19937_64;

inline Nat uniform(Rng& rng, Nat lo, Nat hi) {
  return std::uniform_int_distribution<Nat>(lo, hi)(rng);
}

// Length uniform in [0, max_length], elements from a small domain.
inline std::vector<int> random_values(Rng& rng, Nat max_length) {
  std::vector<int> out(uniform(rng, 0, max_length));
  for (int& v : out) v = static_cast<int>(uniform(rng, 0, 9));
  return out;
}

inline ConsList<int> random_list(Rng& rng, Nat max_length) {
  return ConsList<int>::from_range(random_values(rng, max_length));
}

inline ConsList<int> iota_list(Nat n) {
  ConsListBuilder<int> builder;
  for (Nat i = 0; i < n; ++i) builder.push_back(static_cast<int>(i));
  return std::move(builder).finish();
}

// Well-formed market with 1..8 users and 0..12 items, some hidden.
inline Market random_market(Rng& rng) {
  const Nat users = uniform(rng, 1, 8);
  std::vector<Money> accounts(users);
  for (Money& m : accounts) m = uniform(rng, 0, 500);
  std::vector<Item> items(uniform(rng, 0, 12));
  for (Item& item : items) {
    item.owner = uniform(rng, 0, users - 1);
    item.price = uniform(rng, 0, 3) == 0 ? 0 : uniform(rng, 1, 150);
  }
  return Market{ConsList<Money>::from_range(accounts),
                ConsList<Item>::from_range(items)};
}

// Any operation whose indices land in [0, count + 1], so that both the
// success and the failure branches get exercised.
inline Operation random_operation(Rng& rng, Nat users, Nat items) {
  const Nat user = uniform(rng, 0, users + 1);
  const Nat item = uniform(rng, 0, items + 1);
  switch (uniform(rng, 0, 3)) {
    case 0:
      return Deposit{user, uniform(rng, 0, 200)};
    case 1:
      return Assign{item, user};
    case 2:
      return Price{item, uniform(rng, 0, 3) == 0 ? 0 : uniform(rng, 1, 150)};
    default:
      return Sell{item, user};
  }
}

inline ScriptDocument random_document(Rng& rng, Nat max_ops) {
  ScriptDocument doc;
  const Nat n = uniform(rng, 0, max_ops);
  for (Nat i = 0; i < n; ++i) {
    // Full 64-bit range for some fields, small values for the rest.
    const Nat a = uniform(rng, 0, 1) ? uniform(rng, 0, 1000) : rng();
    const Nat b = uniform(rng, 0, 1) ? uniform(rng, 0, 1000) : rng();
    switch (uniform(rng, 0, 3)) {
      case 0: doc.operations.push_back(Deposit{a, b}); break;
      case 1: doc.operations.push_back(Assign{a, b}); break;
      case 2: doc.operations.push_back(Price{a, b}); break;
      default: doc.operations.push_back(Sell{a, b}); break;
    }
  }
  return doc;
}

}  // namespace market::testing
