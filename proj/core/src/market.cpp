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

#include <ostream>

#include "market/list_ops.hpp"

namespace market {

std::string_view to_string(MarketError error) {
  switch (error) {
    case MarketError::kUserIndexGap:
      return "UserIndexGap";
    case MarketError::kItemIndexGap:
      return "ItemIndexGap";
    case MarketError::kUnknownUser:
      return "UnknownUser";
    case MarketError::kUnknownItem:
      return "UnknownItem";
    case MarketError::kNotAdvertised:
      return "NotAdvertised";
    case MarketError::kInsufficientFunds:
      return "InsufficientFunds";
  }
  return "?";
}

MarketResult deposit(const Market& market, Nat user, Money amount) {
  const Nat users = length(market.accounts);
  if (user > users) return MarketError::kUserIndexGap;
  if (user == users) {
    return Market{append(market.accounts, amount), market.items};
  }
  const Money balance = *get(market.accounts, user);
  return Market{set(market.accounts, user, checked_add(balance, amount)),
                market.items};
}

MarketResult assign(const Market& market, Nat item, Nat user) {
  if (user >= length(market.accounts)) return MarketError::kUnknownUser;
  const Nat items = length(market.items);
  if (item > items) return MarketError::kItemIndexGap;
  const Item fresh{.owner = user, .price = 0};
  if (item == items) return Market{market.accounts, append(market.items, fresh)};
  return Market{market.accounts, set(market.items, item, fresh)};
}

MarketResult price(const Market& market, Nat item, Money amount) {
  const auto current = get(market.items, item);
  if (!current) return MarketError::kUnknownItem;
  return Market{market.accounts,
                set(market.items, item, Item{current->owner, amount})};
}

MarketResult sell(const Market& market, Nat item, Nat buyer) {
  const auto record = get(market.items, item);
  if (!record) return MarketError::kUnknownItem;
  const auto buyer_balance = get(market.accounts, buyer);
  if (!buyer_balance) return MarketError::kUnknownUser;
  if (!record->advertised()) return MarketError::kNotAdvertised;
  const Money amount = record->price;
  if (*buyer_balance < amount) return MarketError::kInsufficientFunds;

  // The buyer is debited before the seller is credited so that a self-sale
  // nets to zero.
  auto accounts = set(market.accounts, buyer, *buyer_balance - amount);
  const Money seller_balance = *get(accounts, record->owner);
  accounts = set(accounts, record->owner, checked_add(seller_balance, amount));
  return Market{std::move(accounts),
                set(market.items, item, Item{.owner = buyer, .price = 0})};
}

MarketResult apply_operation(const Market& market, const Operation& op) {
  struct Dispatch {
    const Market& market;
    MarketResult operator()(const Deposit& o) const {
      return deposit(market, o.user, o.amount);
    }
    MarketResult operator()(const Assign& o) const {
      return assign(market, o.item, o.user);
    }
    MarketResult operator()(const Price& o) const {
      return price(market, o.item, o.amount);
    }
    MarketResult operator()(const Sell& o) const {
      return sell(market, o.item, o.buyer);
    }
  };
  return std::visit(Dispatch{market}, op);
}

Money total_money(const Market& market) {
  return foldl(market.accounts, Money{0},
               [](Money sum, Money balance) { return checked_add(sum, balance); });
}

Result<bool, MarketError> is_advertised(const Market& market, Nat item) {
  const auto record = get(market.items, item);
  if (!record) return MarketError::kUnknownItem;
  return record->advertised();
}

bool well_formed(const Market& market) {
  const Nat users = length(market.accounts);
  return foldl(market.items, true, [users](bool ok, const Item& item) {
    return ok && item.owner < users;
  });
}

ReplayReport run_script(Market market, std::span<const Operation> ops,
                        ReplayMode mode) {
  ReplayReport report;
  report.operations_total = ops.size();
  for (Nat index = 0; index < ops.size(); ++index) {
    MarketResult next = apply_operation(market, ops[index]);
    if (!next) {
      report.failures.push_back({index, next.error()});
      if (mode == ReplayMode::kStrict) {
        report.aborted = true;
        break;
      }
      continue;
    }
    market = std::move(next).value();
    ++report.operations_applied;
    if (std::holds_alternative<Sell>(ops[index])) ++report.sell_count;
  }
  report.market = std::move(market);
  return report;
}

std::ostream& operator<<(std::ostream& os, const Item& item) {
  return os << "{owner:" << item.owner << ", price:" << item.price << '}';
}

std::ostream& operator<<(std::ostream& os, const Market& market) {
  return os << "{accounts:" << market.accounts << ", items:" << market.items
            << '}';
}

std::ostream& operator<<(std::ostream& os, MarketError error) {
  return os << to_string(error);
}

}  // namespace market
