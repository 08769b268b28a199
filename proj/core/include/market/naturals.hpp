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
#include <limits>

namespace market {

// Non-negative integers. Indices, counters and money amounts are all Nat.
// Arithmetic that could leave the representable range aborts the process
// rather than wrapping.
using Nat = std::uint64_t;

inline constexpr Nat kNatMax = std::numeric_limits<Nat>::max();

// Prints `what` to stderr and aborts.
[[noreturn]] void nat_overflow(const char* what);

constexpr Nat succ(Nat n) {
  if (n == kNatMax) nat_overflow("succ");
  return n + 1;
}

// Predecessor, truncated at zero. Matches `Succ_(k) => k | _ => 0`.
constexpr Nat monus1(Nat index) { return index > 0 ? index - 1 : 0; }

// Truncated subtraction: max(a - b, 0).
constexpr Nat monus(Nat a, Nat b) { return a > b ? a - b : 0; }

constexpr Nat checked_add(Nat a, Nat b) {
  if (a > kNatMax - b) nat_overflow("add");
  return a + b;
}

constexpr Nat checked_mul(Nat a, Nat b) {
  if (a != 0 && b > kNatMax / a) nat_overflow("mul");
  return a * b;
}

}  // namespace market
