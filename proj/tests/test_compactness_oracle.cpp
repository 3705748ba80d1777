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
#include <random>
#include <utility>
#include <vector>

#include "carc/arc_model.hpp"
#include "carc/compactness_oracle.hpp"
#include "carc/error.hpp"
#include "carc/generator.hpp"
#include "carc/verifier.hpp"

namespace carc {
namespace {

// Whether the marked positions 0..n-1 form one cyclic run.
bool cyclic_run(const std::vector<char>& mark) {
  const int n = static_cast<int>(mark.size());
  int count = 0;
  int starts = 0;
  for (int i = 0; i < n; ++i) {
    count += mark[static_cast<std::size_t>(i)];
    if (mark[static_cast<std::size_t>(i)] && !mark[static_cast<std::size_t>((i + n - 1) % n)]) ++starts;
  }
  return count == 0 || count == n || starts == 1;
}

// Tries every way of sending each destination over one of its first
// vertices and accepts when each arc's destinations form one interval.
bool vertex_ok(const Graph& g, const DistanceMatrix& d, const std::vector<int>& pos, int v, bool strict) {
  const int n = g.size();
  std::vector<int> dests;
  std::vector<std::vector<int>> options;
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    dests.push_back(u);
    options.push_back(first_vertices(g, d, v, u));
  }
  std::vector<std::size_t> pick(dests.size(), 0);
  for (;;) {
    bool ok = true;
    for (int w : g.neighbors(v)) {
      std::vector<char> mark(static_cast<std::size_t>(n), 0);
      bool any = false;
      for (std::size_t i = 0; i < dests.size(); ++i) {
        if (options[i][pick[i]] == w) {
          mark[static_cast<std::size_t>(pos[static_cast<std::size_t>(dests[i])])] = 1;
          any = true;
        }
      }
      if (!any) continue;
      bool run = cyclic_run(mark);
      if (!run && !strict) {
        mark[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = 1;
        run = cyclic_run(mark);
      }
      if (!run) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == pick.size()) return false;
  }
}

bool brute_force(const Graph& g, bool strict) {
  const int n = g.size();
  const DistanceMatrix d(g);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(static_cast<std::size_t>(n));
  do {
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    bool all = true;
    for (int v = 0; v < n && all; ++v) all = vertex_ok(g, d, pos, v, strict);
    if (all) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

void expect_certified(const Graph& g, const OracleResult& r, bool strict) {
  ASSERT_TRUE(r.exists_1irs);
  ASSERT_TRUE(r.witness_order && r.witness_labels);
  VerifyOptions vo;
  vo.strict = strict;
  EXPECT_TRUE(verify_scheme(g, *r.witness_labels, vo).passed());
  EXPECT_LE(interval_stats(*r.witness_labels).max_intervals_per_arc, 1);
}

TEST(Oracle, RingsHaveOneIntervalSchemes) {
  for (int k : {3, 4, 5, 6, 7, 8}) {
    const Graph g = intersection_graph(gen_ring(k));
    expect_certified(g, has_shortest_path_1irs(g), false);
  }
}

TEST(Oracle, CompleteGraphs) {
  for (int n : {3, 4, 6}) {
    const Graph g = intersection_graph(gen_complete(n));
    OracleOptions strict;
    strict.strict = true;
    expect_certified(g, has_shortest_path_1irs(g, strict), true);
  }
}

TEST(Oracle, WheelThreshold) {
  for (int k : {3, 4, 5}) {
    const Graph g = intersection_graph(gen_wheel(k));
    expect_certified(g, has_shortest_path_1irs(g), false);
  }
  for (int k : {6, 7, 8}) {
    const Graph g = intersection_graph(gen_wheel(k));
    const OracleResult r = has_shortest_path_1irs(g);
    EXPECT_FALSE(r.exists_1irs) << "wheel " << k;
    EXPECT_FALSE(r.witness_labels.has_value());
    EXPECT_LT(r.seconds, 60.0);
  }
}

TEST(Oracle, Guards) {
  const Graph big = intersection_graph(gen_ring(10));
  try {
    has_shortest_path_1irs(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLimitExceeded);
  }
  OracleOptions wide;
  wide.vertex_limit = 10;
  EXPECT_TRUE(has_shortest_path_1irs(big, wide).exists_1irs);
  const Graph apart = Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}});
  EXPECT_THROW(has_shortest_path_1irs(apart), Error);
}

TEST(Oracle, AgreesWithBruteForce) {
  int yes = 0;
  int no = 0;
  for (int n : {4, 5, 6}) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Graph g = intersection_graph(gen_random(n, seed));
      for (bool strict : {false, true}) {
        OracleOptions o;
        o.strict = strict;
        const OracleResult r = has_shortest_path_1irs(g, o);
        ASSERT_EQ(r.exists_1irs, brute_force(g, strict)) << "n=" << n << " seed=" << seed << " strict=" << strict;
        if (r.exists_1irs) {
          expect_certified(g, r, strict);
          ++yes;
        } else {
          ++no;
        }
      }
    }
  }
  for (int k : {5, 6}) {
    const Graph g = intersection_graph(gen_wheel(k));
    const bool found = has_shortest_path_1irs(g).exists_1irs;
    EXPECT_EQ(found, brute_force(g, false));
    ++(found ? yes : no);
  }
  // The search itself does not depend on arcs; general graphs give more
  // negative instances.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 5 + trial % 3;
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng() % 100 < 45) edges.emplace_back(a, b);
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    const auto dist = bfs_distances(g, 0);
    if (std::count(dist.begin(), dist.end(), kUnreachableDistance) > 0) continue;
    for (bool strict : {false, true}) {
      OracleOptions o;
      o.strict = strict;
      const OracleResult r = has_shortest_path_1irs(g, o);
      ASSERT_EQ(r.exists_1irs, brute_force(g, strict)) << "trial=" << trial << " strict=" << strict;
      if (r.exists_1irs) expect_certified(g, r, strict);
      ++(r.exists_1irs ? yes : no);
    }
  }
  EXPECT_GT(yes, 0);
  EXPECT_GT(no, 0);
}

}  // namespace
}  // namespace carc
