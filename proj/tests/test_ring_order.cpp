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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "carc/error.hpp"
#include "carc/ring_order.hpp"

namespace carc {
namespace {

// Naive expansion: follow successors one at a time.
std::vector<int> expand(const CyclicOrder& o, int from, int to) {
  std::vector<int> out{from};
  while (out.back() != to) out.push_back(o.successor(out.back()));
  return out;
}

std::vector<CyclicOrder> some_orders(int n) {
  std::vector<int> items(static_cast<std::size_t>(n));
  std::iota(items.begin(), items.end(), 0);
  std::vector<CyclicOrder> out{CyclicOrder(items)};
  std::reverse(items.begin(), items.end());
  out.emplace_back(items);
  std::rotate(items.begin(), items.begin() + n / 2, items.end());
  out.emplace_back(items);
  return out;
}

TEST(RingOrder, SingleElementIsFixedPoint) {
  const CyclicOrder o = CyclicOrder::identity(1);
  EXPECT_EQ(o.successor(0), 0);
  EXPECT_EQ(o.predecessor(0), 0);
  EXPECT_EQ(o.ring_sequence(0, 0), std::vector<int>{0});
}

TEST(RingOrder, SuccessorWraps) {
  const CyclicOrder o = CyclicOrder::identity(4);
  EXPECT_EQ(o.successor(3), 0);
  EXPECT_EQ(o.predecessor(0), 3);
  int x = 1;
  for (int i = 0; i < 4; ++i) x = o.successor(x);
  EXPECT_EQ(x, 1);
  EXPECT_EQ(o.advance(1, 4), 1);
  EXPECT_EQ(o.advance(1, -2), 3);
}

TEST(RingOrder, RingSequenceExamples) {
  const CyclicOrder o = CyclicOrder::identity(4);
  EXPECT_EQ(o.ring_sequence(0, 0), (std::vector<int>{0}));
  EXPECT_EQ(o.ring_sequence(3, 1), (std::vector<int>{3, 0, 1}));
  EXPECT_EQ(o.ring_sequence(1, 0), (std::vector<int>{1, 2, 3, 0}));
}

TEST(RingOrder, ContainsExamples) {
  const CyclicOrder o = CyclicOrder::identity(4);
  EXPECT_TRUE(o.interval_contains({0, 0}, 0));
  EXPECT_FALSE(o.interval_contains({0, 0}, 1));
  EXPECT_TRUE(o.interval_contains({3, 1}, 0));
  EXPECT_FALSE(o.interval_contains({3, 1}, 2));
}

TEST(RingOrder, JoinExamples) {
  const CyclicOrder o = CyclicOrder::identity(4);
  EXPECT_EQ(o.join({1, 1}, {2, 2}), (RingInterval{1, 2}));
  EXPECT_FALSE(o.join({0, 1}, {1, 2}).has_value());
  EXPECT_FALSE(o.join({2, 2}, {1, 1}).has_value());
  // Joining up to the full ring is allowed; wrapping onto itself is not.
  EXPECT_EQ(o.join({1, 2}, {3, 0}), (RingInterval{1, 0}));
  EXPECT_FALSE(o.join({0, 2}, {3, 0}).has_value());
}

TEST(RingOrder, RejectsBadInput) {
  EXPECT_THROW(CyclicOrder(std::vector<int>{}), Error);
  EXPECT_THROW(CyclicOrder(std::vector<int>{0, 0}), Error);
  EXPECT_THROW(CyclicOrder(std::vector<int>{0, 2}), Error);
  const CyclicOrder o = CyclicOrder::identity(3);
  try {
    o.successor(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownElement);
  }
  EXPECT_THROW(o.position(-1), Error);
  EXPECT_FALSE(o.contains_element(5));
}

TEST(RingOrder, ExhaustiveAgreementWithExpansion) {
  for (int n = 1; n <= 8; ++n) {
    for (const CyclicOrder& o : some_orders(n)) {
      for (int i = 0; i < n; ++i) EXPECT_EQ(o.position(o.at(i)), i);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          const auto seq = expand(o, a, b);
          ASSERT_EQ(o.ring_sequence(a, b), seq);
          ASSERT_EQ(o.interval_size({a, b}), static_cast<int>(seq.size()));
          ASSERT_EQ(static_cast<int>(seq.size()), (o.position(b) - o.position(a) + n) % n + 1);
          const std::set<int> members(seq.begin(), seq.end());
          for (int x = 0; x < n; ++x) ASSERT_EQ(o.interval_contains({a, b}, x), members.count(x) == 1);
        }
      }
    }
  }
}

TEST(RingOrder, ExhaustiveJoinAndOverlap) {
  for (int n = 1; n <= 6; ++n) {
    for (const CyclicOrder& o : some_orders(n)) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int c = 0; c < n; ++c) {
            for (int d = 0; d < n; ++d) {
              const auto s1 = expand(o, a, b);
              const auto s2 = expand(o, c, d);
              std::set<int> m1(s1.begin(), s1.end());
              std::set<int> m2(s2.begin(), s2.end());
              std::set<int> both;
              std::set_intersection(m1.begin(), m1.end(), m2.begin(), m2.end(), std::inserter(both, both.end()));
              ASSERT_EQ(o.intervals_overlap({a, b}, {c, d}), !both.empty());
              const bool joinable = both.empty() && o.successor(b) == c;
              const auto j = o.join({a, b}, {c, d});
              ASSERT_EQ(j.has_value(), joinable);
              if (j) {
                const auto sj = expand(o, j->from, j->to);
                std::set<int> uni = m1;
                uni.insert(m2.begin(), m2.end());
                ASSERT_EQ(std::set<int>(sj.begin(), sj.end()), uni);
              }
            }
          }
        }
      }
    }
  }
}

TEST(RingOrder, JoinIsAssociativeOnChains) {
  const CyclicOrder o(std::vector<int>{4, 2, 0, 5, 1, 3});
  const RingInterval x{4, 2}, y{0, 5}, z{1, 1};
  const auto left = o.join(*o.join(x, y), z);
  const auto right = o.join(x, *o.join(y, z));
  ASSERT_TRUE(left && right);
  EXPECT_EQ(*left, *right);
  EXPECT_EQ(*left, (RingInterval{4, 1}));
}

}  // namespace
}  // namespace carc
