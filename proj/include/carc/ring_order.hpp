// Copyright 2026 The carc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CARC_RING_ORDER_HPP_
#define CARC_RING_ORDER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace carc {

// Endpoints of a ring-interval: every element from `from`, following
// successors, up to and including `to`. Directional; [a,b] != [b,a] unless
// a == b. An empty interval has no representation.
struct RingInterval {
  int from = 0;
  int to = 0;

  friend bool operator==(const RingInterval&, const RingInterval&) = default;
};

// A cyclic order over the dense ids 0..n-1. items[i] is followed by
// items[(i+1) % n].
class CyclicOrder {
 public:
  CyclicOrder() = default;
  // Throws kInvalidArgument unless `items` is a permutation of 0..n-1, n >= 1.
  explicit CyclicOrder(std::vector<int> items);

  // The identity order (0, 1, ..., n-1).
  static CyclicOrder identity(int n);

  int size() const { return static_cast<int>(items_.size()); }
  std::span<const int> items() const { return items_; }
  int at(int index) const { return items_[static_cast<std::size_t>(index)]; }

  int position(int element) const {
    check(element);
    return position_[static_cast<std::size_t>(element)];
  }
  bool contains_element(int element) const;

  int successor(int element) const;
  int predecessor(int element) const;
  // Element reached after `steps` successor applications (steps may be < 0).
  int advance(int element, int steps) const;

  // Number of successor steps from `from` to `to`, in [0, n).
  int distance(int from, int to) const {
    const int d = position(to) - position(from);
    return d < 0 ? d + size() : d;
  }

  std::vector<int> ring_sequence(int from, int to) const;
  std::vector<int> ring_sequence(RingInterval ivl) const {
    return ring_sequence(ivl.from, ivl.to);
  }

  int interval_size(RingInterval ivl) const { return distance(ivl.from, ivl.to) + 1; }
  bool interval_contains(RingInterval ivl, int x) const;
  // True when the member sets share at least one element.
  bool intervals_overlap(RingInterval a, RingInterval b) const;

  // [left.from, right.to] when the two intervals are disjoint and right.from
  // is the successor of left.to; nullopt otherwise.
  std::optional<RingInterval> join(RingInterval left, RingInterval right) const;

  friend bool operator==(const CyclicOrder& a, const CyclicOrder& b) {
    return a.items_ == b.items_;
  }

 private:
  void check(int element) const {
    if (element < 0 || element >= size()) [[unlikely]] throw_unknown(element);
  }
  [[noreturn]] static void throw_unknown(int element);

  std::vector<int> items_;
  std::vector<int> position_;
};

}  // namespace carc

#endif  // CARC_RING_ORDER_HPP_
