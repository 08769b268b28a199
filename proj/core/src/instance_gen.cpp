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

#include <stdexcept>

namespace market {

namespace {

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : state_{seed} {}

  Nat next() {
    auto [state, value] = prng_next(state_);
    state_ = state;
    return value;
  }

  Nat below(Nat bound) { return next() % bound; }
  Money price() { return 1 + below(kMaxGeneratedPrice); }

 private:
  PrngState state_;
};

}  // namespace

bool valid(const GenParams& p) { return p.users >= 1 && p.items >= 1; }

ScriptDocument generate(const GenParams& p) {
  if (!valid(p)) throw std::invalid_argument("generate: users and items must be >= 1");
  ScriptDocument doc;
  doc.operations.reserve(generated_operation_count(p));
  Draws draws(p.seed);

  const Money budget = checked_mul(kMaxGeneratedPrice, p.transactions);
  for (Nat user = 0; user < p.users; ++user) {
    doc.operations.push_back(Deposit{user, budget});
  }
  for (Nat item = 0; item < p.items; ++item) {
    doc.operations.push_back(Assign{item, item % p.users});
    doc.operations.push_back(Price{item, draws.price()});
  }
  for (Nat t = 0; t < p.transactions; ++t) {
    const Nat item = draws.below(p.items);
    const Nat buyer = draws.below(p.users);
    doc.operations.push_back(Sell{item, buyer});
    doc.operations.push_back(Price{item, draws.price()});
  }
  return doc;
}

}  // namespace market
