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

#include "market/operation.hpp"

#include <ostream>

namespace market {

namespace {

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::string_view op_tag(const Operation& op) {
  return std::visit(Overloaded{
                        [](const Deposit&) { return std::string_view("deposit"); },
                        [](const Assign&) { return std::string_view("assign"); },
                        [](const Price&) { return std::string_view("price"); },
                        [](const Sell&) { return std::string_view("sell"); },
                    },
                    op);
}

std::ostream& operator<<(std::ostream& os, const Deposit& op) {
  return os << "Deposit{user:" << op.user << ", amount:" << op.amount << '}';
}

std::ostream& operator<<(std::ostream& os, const Assign& op) {
  return os << "Assign{item:" << op.item << ", user:" << op.user << '}';
}

std::ostream& operator<<(std::ostream& os, const Price& op) {
  return os << "Price{item:" << op.item << ", amount:" << op.amount << '}';
}

std::ostream& operator<<(std::ostream& os, const Sell& op) {
  return os << "Sell{item:" << op.item << ", buyer:" << op.buyer << '}';
}

std::ostream& operator<<(std::ostream& os, const Operation& op) {
  std::visit([&os](const auto& o) { os << o; }, op);
  return os;
}

}  // namespace market
