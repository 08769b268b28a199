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

#include <cstdint>
#include <utility>

#include "market/naturals.hpp"
#include "market/script_io.hpp"

namespace market {

// 64-bit linear congruential generator (Knuth's MMIX constants). Each draw
// yields the top 31 bits of the advanced state. The constants are fixed so
// that generated instances are byte-identical everywhere.
struct PrngState {
  std::uint64_t state = 0;
  friend bool operator==(const PrngState&, const PrngState&) = default;
};

inline constexpr std::uint64_t kLcgMultiplier = 6364136223846793005ULL;
inline constexpr std::uint64_t kLcgIncrement = 1442695040888963407ULL;

constexpr std::pair<PrngState, Nat> prng_next(PrngState s) {
  const std::uint64_t next = s.state * kLcgMultiplier + kLcgIncrement;
  return {PrngState{next}, next >> 33};
}

struct GenParams {
  Nat users = 1;
  Nat items = 1;
  Nat transactions = 0;
  std::uint64_t seed = 0;
};

bool valid(const GenParams& p);

inline constexpr Money kMaxGeneratedPrice = 100;

// Synthetic instance, in order:
//   users deposits of 100 * transactions each;
//   per item: assign round-robin to a user, then price in [1, 100];
//   per transaction: sell a random item to a random buyer, then re-price it.
// Every generated script replays without failures. Draw order per
// transaction is item, buyer, price.
// Precondition: valid(p).
ScriptDocument generate(const GenParams& p);

inline Nat generated_operation_count(const GenParams& p) {
  return checked_add(p.users, checked_mul(2, checked_add(p.items, p.transactions)));
}

}  // namespace market
