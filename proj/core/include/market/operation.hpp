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
#include <string_view>
#include <variant>

#include "market/naturals.hpp"

namespace market {

using Money = Nat;

// Declares user `user` (when it equals the number of accounts) or credits
// an existing account.
struct Deposit {
  Nat user = 0;
  Money amount = 0;
  friend bool operator==(const Deposit&, const Deposit&) = default;
};

// Declares item `item` or hands an existing one to a new owner.
struct Assign {
  Nat item = 0;
  Nat user = 0;
  friend bool operator==(const Assign&, const Assign&) = default;
};

// Advertises an item at `amount`, or hides it when `amount` is zero.
struct Price {
  Nat item = 0;
  Money amount = 0;
  friend bool operator==(const Price&, const Price&) = default;
};

struct Sell {
  Nat item = 0;
  Nat buyer = 0;
  friend bool operator==(const Sell&, const Sell&) = default;
};

using Operation = std::variant<Deposit, Assign, Price, Sell>;

// "deposit", "assign", "price" or "sell".
std::string_view op_tag(const Operation& op);

std::ostream& operator<<(std::ostream& os, const Deposit& op);
std::ostream& operator<<(std::ostream& os, const Assign& op);
std::ostream& operator<<(std::ostream& os, const Price& op);
std::ostream& operator<<(std::ostream& os, const Sell& op);
std::ostream& operator<<(std::ostream& os, const Operation& op);

}  // namespace market
