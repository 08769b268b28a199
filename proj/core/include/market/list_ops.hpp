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

#include <optional>
#include <type_traits>
#include <utility>

#include "market/cons_list.hpp"
#include "market/naturals.hpp"

// Fold, length, accessor and update operations over ConsList.
//
// Every operation used on production paths runs in constant stack space.
// length_def and set_def are the naive structurally recursive definitions;
// they are kept as reference oracles for tests and use stack proportional to
// the list length (or index), so they must not be used on large inputs.

namespace market {

namespace detail {

// Tail-recursive left fold, written as the loop it compiles to.
template <typename A, typename B, typename F>
B tailrec_foldl(const ConsList<A>& list, B current, F&& next) {
  for (const A& elem : list) current = next(std::move(current), elem);
  return current;
}

// Satisfies tailrec_length(l, acc) == tailrec_length(l, 0) + acc.
template <typename A>
Nat tailrec_length(const ConsList<A>& list, Nat accum) {
  for (auto it = list.begin(); it != list.end(); ++it) accum = succ(accum);
  return accum;
}

template <typename A>
std::optional<A> tailrec_get(const ConsList<A>& list, Nat index,
                             Nat current) {
  for (const A& elem : list) {
    if (current == index) return elem;
    current = succ(current);
  }
  return std::nullopt;
}

}  // namespace detail

template <typename A, typename B, typename F>
B foldl(const ConsList<A>& list, B initial, F&& next) {
  return detail::tailrec_foldl(list, std::move(initial),
                               std::forward<F>(next));
}

template <typename A>
Nat length_fl(const ConsList<A>& list) {
  return foldl(list, Nat{0}, [](Nat accum, const A&) { return succ(accum); });
}

template <typename A>
Nat length_tr(const ConsList<A>& list) {
  return detail::tailrec_length(list, 0);
}

// Naive recursive length. Oracle only.
template <typename A>
Nat length_def(const ConsList<A>& list) {
  if (list.is_nil()) return 0;
  return succ(length_def(list.tail()));
}

template <typename A>
Nat length(const ConsList<A>& list) {
  return length_tr(list);
}

// Element at a zero-based index, or nullopt when index >= length.
template <typename A>
std::optional<A> get(const ConsList<A>& list, Nat index) {
  return detail::tailrec_get(list, index, 0);
}

// Naive recursive positional update. Oracle only.
template <typename A>
ConsList<A> set_def(const ConsList<A>& list, Nat index,
                const std::type_identity_t<A>& element) {
  if (list.is_nil()) return {};
  if (index == 0) return ConsList<A>::cons(element, list.tail());
  return ConsList<A>::cons(list.head(),
                           set_def(list.tail(), monus1(index), element));
}

// Positional update in constant stack space. Copies the prefix before
// `index` and shares the suffix after it. Out-of-range indices return the
// input list itself.
template <typename A>
ConsList<A> set(const ConsList<A>& list, Nat index,
                const std::type_identity_t<A>& element) {
  ConsListBuilder<A> prefix;
  Nat position = 0;
  for (auto it = list.begin(); it != list.end(); ++it) {
    if (position == index) {
      prefix.push_back(element);
      return std::move(prefix).finish(std::next(it).rest());
    }
    prefix.push_back(*it);
    position = succ(position);
  }
  return list;
}

// A new list with `element` after the last position. Copies the whole list.
template <typename A>
ConsList<A> append(const ConsList<A>& list,
                   const std::type_identity_t<A>& element) {
  ConsListBuilder<A> out;
  for (const A& elem : list) out.push_back(elem);
  out.push_back(element);
  return std::move(out).finish();
}

}  // namespace market
