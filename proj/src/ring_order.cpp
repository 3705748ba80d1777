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

#include "carc/ring_order.hpp"

#include <string>

#include "carc/error.hpp"

namespace carc {

CyclicOrder::CyclicOrder(std::vector<int> items) : items_(std::move(items)) {
  const int n = size();
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "cyclic order must have at least one element");
  position_.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int e = items_[static_cast<std::size_t>(i)];
    if (e < 0 || e >= n || position_[static_cast<std::size_t>(e)] != -1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cyclic order items must be a permutation of 0.." + std::to_string(n - 1));
    }
    position_[static_cast<std::size_t>(e)] = i;
  }
}

CyclicOrder CyclicOrder::identity(int n) {
  std::vector<int> items(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) items[static_cast<std::size_t>(i)] = i;
  return CyclicOrder(std::move(items));
}

void CyclicOrder::throw_unknown(int element) {
  throw Error(ErrorCode::kUnknownElement, "unknown element id " + std::to_string(element));
}

bool CyclicOrder::contains_element(int element) const {
  return element >= 0 && element < size();
}

int CyclicOrder::successor(int element) const { return advance(element, 1); }

int CyclicOrder::predecessor(int element) const { return advance(element, -1); }

int CyclicOrder::advance(int element, int steps) const {
  const int n = size();
  int p = (position(element) + steps % n) % n;
  if (p < 0) p += n;
  return items_[static_cast<std::size_t>(p)];
}

std::vector<int> CyclicOrder::ring_sequence(int from, int to) const {
  const int len = distance(from, to) + 1;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(len));
  int p = position(from);
  for (int i = 0; i < len; ++i) {
    out.push_back(items_[static_cast<std::size_t>(p)]);
    if (++p == size()) p = 0;
  }
  return out;
}

bool CyclicOrder::interval_contains(RingInterval ivl, int x) const {
  return distance(ivl.from, x) <= distance(ivl.from, ivl.to);
}

bool CyclicOrder::intervals_overlap(RingInterval a, RingInterval b) const {
  return interval_contains(a, b.from) || interval_contains(b, a.from);
}

std::optional<RingInterval> CyclicOrder::join(RingInterval left, RingInterval right) const {
  if (intervals_overlap(left, right)) return std::nullopt;
  if (successor(left.to) != right.from) return std::nullopt;
  return RingInterval{left.from, right.to};
}

}  // namespace carc
