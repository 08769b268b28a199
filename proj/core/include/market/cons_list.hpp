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

#include <atomic>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <new>
#include <ostream>
#include <ranges>
#include <utility>

namespace market {

namespace detail {

// Per-thread free list of equally sized blocks. Blocks come from the global
// allocator, so a block freed on another thread simply joins that thread's
// list. Lists are capped and drained at thread exit.
template <std::size_t Size, std::size_t Align>
class BlockCache {
  struct FreeBlock {
    FreeBlock* next;
  };
  static_assert(Size >= sizeof(FreeBlock));

 public:
  static void* allocate() {
    Lists& lists = local();
    if (lists.head != nullptr) {
      FreeBlock* block = lists.head;
      lists.head = block->next;
      --lists.count;
      return block;
    }
    return ::operator new(Size, std::align_val_t{Align});
  }

  static void deallocate(void* ptr) noexcept {
    Lists& lists = local();
    if (retired || lists.count >= kCapacity) {
      ::operator delete(ptr, std::align_val_t{Align});
      return;
    }
    lists.head = new (ptr) FreeBlock{lists.head};
    ++lists.count;
  }

  // Blocks released together. On destruction they go back to the cache in
  // release order, so the next run of allocations reuses them front to back
  // and a rebuilt list prefix keeps the address order of the old one.
  class Chain {
   public:
    Chain() = default;
    Chain(const Chain&) = delete;
    Chain& operator=(const Chain&) = delete;

    void push_back(void* ptr) noexcept {
      auto* block = new (ptr) FreeBlock{nullptr};
      if (last_ == nullptr) {
        first_ = block;
      } else {
        last_->next = block;
      }
      last_ = block;
      ++count_;
    }

    ~Chain() {
      if (first_ == nullptr) return;
      Lists& lists = local();
      if (retired || lists.count + count_ > kCapacity) {
        while (first_ != nullptr) {
          FreeBlock* next = first_->next;
          ::operator delete(static_cast<void*>(first_), std::align_val_t{Align});
          first_ = next;
        }
        return;
      }
      last_->next = lists.head;
      lists.head = first_;
      lists.count += count_;
    }

   private:
    FreeBlock* first_ = nullptr;
    FreeBlock* last_ = nullptr;
    std::size_t count_ = 0;
  };

 private:
  static constexpr std::size_t kCapacity = std::size_t{1} << 20;

  struct Lists {
    FreeBlock* head = nullptr;
    std::size_t count = 0;
    ~Lists() {
      while (head != nullptr) {
        FreeBlock* next = head->next;
        ::operator delete(static_cast<void*>(head), std::align_val_t{Align});
        head = next;
      }
      count = 0;
      retired = true;
    }
  };

  static Lists& local() {
    thread_local Lists lists;
    return lists;
  }

  // Set once this thread's lists are destroyed; later frees bypass them.
  static inline thread_local bool retired = false;
};

}  // namespace detail

template <typename A>
class ConsListBuilder;

// Immutable singly-linked list: either Nil or a head prepended to a tail.
//
// Nodes are reference counted and never modified once a list refers to
// them, so lists (and any suffix of a list) can be shared freely between
// values and threads. Copying a list is O(1). Destruction is iterative, so
// dropping the last reference to a long list does not recurse.
template <typename A>
class ConsList {
  struct Node {
    Node(A h, const Node* t) : head(std::move(h)), tail(t) {}

    static void* operator new(std::size_t) {
      return detail::BlockCache<sizeof(Node), alignof(Node)>::allocate();
    }
    static void operator delete(void* ptr) noexcept {
      detail::BlockCache<sizeof(Node), alignof(Node)>::deallocate(ptr);
    }

    mutable std::atomic<std::size_t> refs{1};
    A head;
    const Node* tail;
  };

 public:
  using value_type = A;

  class const_iterator {
   public:
    using iterator_concept = std::forward_iterator_tag;
    using iterator_category = std::forward_iterator_tag;
    using value_type = A;
    using difference_type = std::ptrdiff_t;
    using pointer = const A*;
    using reference = const A&;

    const_iterator() = default;

    reference operator*() const { return node_->head; }
    pointer operator->() const { return &node_->head; }

    const_iterator& operator++() {
      node_ = node_->tail;
      return *this;
    }
    const_iterator operator++(int) {
      auto prev = *this;
      ++*this;
      return prev;
    }

    // The suffix of the list starting at this position; shares storage.
    ConsList rest() const { return ConsList::adopt_shared(node_); }

    friend bool operator==(const const_iterator&,
                           const const_iterator&) = default;

   private:
    friend class ConsList;
    explicit const_iterator(const Node* node) : node_(node) {}
    const Node* node_ = nullptr;
  };
  using iterator = const_iterator;

  // Nil.
  ConsList() noexcept = default;

  ConsList(std::initializer_list<A> elems) {
    *this = from_range(elems);
  }

  ConsList(const ConsList& other) noexcept : node_(other.node_) {
    retain(node_);
  }
  ConsList(ConsList&& other) noexcept
      : node_(std::exchange(other.node_, nullptr)) {}
  ConsList& operator=(ConsList other) noexcept {
    std::swap(node_, other.node_);
    return *this;
  }
  ~ConsList() { release(node_); }

  static ConsList cons(A head, ConsList tail) {
    ConsList out;
    out.node_ = new Node(std::move(head), std::exchange(tail.node_, nullptr));
    return out;
  }

  template <std::ranges::input_range R>
  static ConsList from_range(R&& range);

  bool is_nil() const noexcept { return node_ == nullptr; }

  // Precondition: !is_nil().
  const A& head() const { return node_->head; }
  ConsList tail() const { return adopt_shared(node_->tail); }

  const_iterator begin() const noexcept { return const_iterator(node_); }
  const_iterator end() const noexcept { return const_iterator(); }

  // True when both lists are the same node chain (not merely equal).
  bool shares_storage_with(const ConsList& other) const noexcept {
    return node_ == other.node_;
  }

  friend bool operator==(const ConsList& lhs, const ConsList& rhs) {
    const Node* a = lhs.node_;
    const Node* b = rhs.node_;
    while (a != b) {
      if (a == nullptr || b == nullptr || !(a->head == b->head)) return false;
      a = a->tail;
      b = b->tail;
    }
    return true;
  }

 private:
  friend class ConsListBuilder<A>;

  static ConsList adopt_shared(const Node* node) noexcept {
    ConsList out;
    out.node_ = node;
    retain(node);
    return out;
  }

  static void retain(const Node* node) noexcept {
    if (node != nullptr) node->refs.fetch_add(1, std::memory_order_relaxed);
  }

  static void release(const Node* node) noexcept {
    typename detail::BlockCache<sizeof(Node), alignof(Node)>::Chain freed;
    // A count of one held by the caller cannot be raised concurrently, so
    // the sole owner skips the read-modify-write.
    while (node != nullptr &&
           (node->refs.load(std::memory_order_acquire) == 1 ||
            node->refs.fetch_sub(1, std::memory_order_acq_rel) == 1)) {
      const Node* next = node->tail;
      node->~Node();
      freed.push_back(const_cast<Node*>(node));
      node = next;
    }
  }

  const Node* node_ = nullptr;
};

// Builds a list front to back. Nodes are private to the builder until
// finish() publishes them, which is the only point where a node's tail is
// written after construction.
template <typename A>
class ConsListBuilder {
  using Node = typename ConsList<A>::Node;

 public:
  ConsListBuilder() = default;
  ConsListBuilder(const ConsListBuilder&) = delete;
  ConsListBuilder& operator=(const ConsListBuilder&) = delete;
  ~ConsListBuilder() { ConsList<A>::release(first_); }

  void push_back(A value) {
    Node* node = new Node(std::move(value), nullptr);
    if (last_ == nullptr) {
      first_ = node;
    } else {
      last_->tail = node;
    }
    last_ = node;
  }

  // Appends `tail` (shared, not copied) and returns the finished list.
  ConsList<A> finish(ConsList<A> tail = {}) && {
    ConsList<A> out;
    if (last_ == nullptr) return tail;
    last_->tail = std::exchange(tail.node_, nullptr);
    out.node_ = std::exchange(first_, nullptr);
    last_ = nullptr;
    return out;
  }

 private:
  Node* first_ = nullptr;
  Node* last_ = nullptr;
};

template <typename A>
template <std::ranges::input_range R>
ConsList<A> ConsList<A>::from_range(R&& range) {
  ConsListBuilder<A> builder;
  for (auto&& elem : range) builder.push_back(A(elem));
  return std::move(builder).finish();
}

template <typename A>
std::ostream& operator<<(std::ostream& os, const ConsList<A>& list) {
  os << '[';
  bool first = true;
  for (const A& elem : list) {
    if (!first) os << ", ";
    os << elem;
    first = false;
  }
  return os << ']';
}

}  // namespace market
