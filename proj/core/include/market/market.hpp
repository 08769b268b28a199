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
#include <string_view>
#include <vector>

#include "market/cons_list.hpp"
#include "market/naturals.hpp"
#include "market/operation.hpp"
#include "market/result.hpp"

// The mediator's state machine. A user is the position of an account, an
// item is the position of an item record. Every transition is a pure
// function from one market value to the next, and a failed transition
// produces no new state.

namespace market {

struct Item {
  Nat owner = 0;
  Money price = 0;

  // An item is for sale exactly when its price is positive.
  bool advertised() const noexcept { return price > 0; }

  friend bool operator==(const Item&, const Item&) = default;
};

struct Market {
  ConsList<Money> accounts;
  ConsList<Item> items;

  friend bool operator==(const Market&, const Market&) = default;
};

enum class MarketError {
  kUserIndexGap,
  kItemIndexGap,
  kUnknownUser,
  kUnknownItem,
  kNotAdvertised,
  kInsufficientFunds,
};

std::string_view to_string(MarketError error);

using MarketResult = Result<Market, MarketError>;

// Credits `amount` to an existing user, or declares the user when `user`
// equals the number of accounts.
MarketResult deposit(const Market& market, Nat user, Money amount);

// Gives `item` to `user` and hides it. Declares the item when `item`
// equals the number of items.
MarketResult assign(const Market& market, Nat item, Nat user);

MarketResult price(const Market& market, Nat item, Money amount);

// Moves the item to `buyer` and its price from the buyer to the previous
// owner, then hides the item. All or nothing.
MarketResult sell(const Market& market, Nat item, Nat buyer);

MarketResult apply_operation(const Market& market, const Operation& op);

Money total_money(const Market& market);

Result<bool, MarketError> is_advertised(const Market& market, Nat item);

// Every item owner names an existing account.
bool well_formed(const Market& market);

enum class ReplayMode { kLenient, kStrict };

struct Failure {
  Nat index = 0;
  MarketError error = MarketError::kUnknownItem;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct ReplayReport {
  Market market;
  Nat operations_total = 0;
  Nat operations_applied = 0;
  Nat sell_count = 0;
  std::vector<Failure> failures;
  // Strict mode stopped at failures.back(); `market` is the state before it.
  bool aborted = false;
};

// Left fold of apply_operation over `ops`. Lenient mode records failures and
// carries the previous state forward; strict mode stops at the first one.
ReplayReport run_script(Market market, std::span<const Operation> ops,
                        ReplayMode mode);

std::ostream& operator<<(std::ostream& os, const Item& item);
std::ostream& operator<<(std::ostream& os, const Market& market);
std::ostream& operator<<(std::ostream& os, MarketError error);

}  // namespace market
