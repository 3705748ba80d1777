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
#include <string>
#include <vector>

#include "carc/arc_model.hpp"
#include "carc/error.hpp"
#include "carc/generator.hpp"
#include "carc/irs_builder.hpp"
#include "carc/routing_scheme.hpp"
#include "carc/verifier.hpp"

namespace carc {
namespace {

struct C4 {
  Graph graph = intersection_graph(gen_ring(4));
  RoutingScheme scheme = build_scheme(gen_ring(4));
  void set(int v, int w, std::vector<RingInterval> ivls) { scheme.find(v, w)->intervals = std::move(ivls); }
};

bool has_kind(const VerificationReport& r, ViolationKind k) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& x) { return x.kind == k; });
}

TEST(Verifier, BuilderOutputPasses) {
  C4 c;
  const VerificationReport r = verify_scheme(c.graph, c.scheme);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.stats.total_intervals, 8);
  EXPECT_EQ(r.stats.bound, 12);
}

TEST(Verifier, EitherFirstVertexIsAccepted) {
  // F(v0, v2) = {v1, v3}: moving v2 over to (v0,v3) keeps the scheme valid.
  C4 c;
  c.set(0, 1, {{1, 1}});
  c.set(0, 3, {{2, 3}});
  EXPECT_TRUE(verify_scheme(c.graph, c.scheme).passed());
}

TEST(Verifier, Strictness) {
  C4 c;
  c.set(0, 1, {{0, 2}});
  const VerificationReport r = verify_scheme(c.graph, c.scheme);
  EXPECT_FALSE(r.strictness_ok);
  EXPECT_TRUE(r.disjoint_ok && r.coverage_ok && r.shortest_ok);
  EXPECT_TRUE(has_kind(r, ViolationKind::kStrictness));
  VerifyOptions relaxed;
  relaxed.strict = false;
  EXPECT_TRUE(verify_scheme(c.graph, c.scheme, relaxed).passed());
}

TEST(Verifier, Disjointness) {
  C4 c;
  c.set(0, 3, {{2, 3}});
  const VerificationReport r = verify_scheme(c.graph, c.scheme);
  EXPECT_FALSE(r.disjoint_ok);
  const auto it = std::find_if(r.violations.begin(), r.violations.end(),
                               [](const Violation& x) { return x.kind == ViolationKind::kDisjointness; });
  ASSERT_NE(it, r.violations.end());
  EXPECT_EQ(it->vertex, 0);
  EXPECT_EQ(it->destination, 2);
}

TEST(Verifier, Coverage) {
  C4 c;
  c.set(0, 3, {});
  const VerificationReport r = verify_scheme(c.graph, c.scheme);
  EXPECT_FALSE(r.coverage_ok);
  EXPECT_TRUE(has_kind(r, ViolationKind::kCoverage));
}

TEST(Verifier, ShortestPath) {
  const ArcModel m = gen_ring(6);
  const Graph g = intersection_graph(m);
  RoutingScheme s = build_scheme(m);
  // v2 is two hops away through v1 and four the other way round.
  s.find(0, 1)->intervals = {{1, 1}};
  s.find(0, 5)->intervals = {{2, 5}};
  s.find(5, 0)->intervals = {{0, 1}};
  s.find(5, 4)->intervals = {{2, 4}};
  const VerificationReport r = verify_scheme(g, s);
  EXPECT_FALSE(r.shortest_ok);
  EXPECT_TRUE(r.strictness_ok && r.disjoint_ok && r.coverage_ok);
  const auto it = std::find_if(r.violations.begin(), r.violations.end(),
                               [](const Violation& x) { return x.kind == ViolationKind::kShortestPath; });
  ASSERT_NE(it, r.violations.end());
  EXPECT_EQ(it->vertex, 0);
  EXPECT_EQ(it->target, 5);
  EXPECT_EQ(it->destination, 2);
  const RouteSweep sweep = route_all_pairs(s, g);
  EXPECT_EQ(sweep.failed, 0);
  EXPECT_GT(sweep.non_shortest, 0);
  EXPECT_EQ(route(s, g, 0, 2), (std::vector<int>{0, 5, 4, 3, 2}));
}

TEST(Verifier, StructuralMismatch) {
  C4 c;
  const Graph k2 = intersection_graph(ArcModel{2, {{0, 2}, {1, 3}}});
  EXPECT_THROW(verify_scheme(k2, c.scheme), Error);
  // An arc between non-adjacent vertices.
  const RoutingScheme bad(CyclicOrder::identity(4),
                          {{{1, {{1, 1}}}, {2, {{2, 3}}}}, {{0, {{2, 0}}}}, {{1, {{3, 1}}}}, {{0, {{0, 2}}}}});
  try {
    verify_scheme(c.graph, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStructural);
  }
}

TEST(Verifier, ThreadsGiveTheSameReport) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ArcModel m = gen_random(40, seed);
    const Graph g = intersection_graph(m);
    RoutingScheme s = build_scheme(m);
    // Damage a few vertices so there is something to report.
    for (int v = 0; v < 40; v += 7) {
      ArcLabel* a = s.find(v, g.neighbors(v)[0]);
      a->intervals.push_back({v, v});
    }
    VerifyOptions one;
    VerifyOptions many;
    many.threads = 4;
    const std::string a = report_to_json(verify_scheme(g, s, one));
    EXPECT_EQ(a, report_to_json(verify_scheme(g, s, many)));
    many.threads = 0;
    EXPECT_EQ(a, report_to_json(verify_scheme(g, s, many)));
  }
}

TEST(Verifier, ReportJsonLayout) {
  C4 c;
  const std::string json = report_to_json(verify_scheme(c.graph, c.scheme));
  EXPECT_EQ(json.rfind("{\n  \"passed\": true,", 0), 0u) << json;
  EXPECT_NE(json.find("\"violations\": []"), std::string::npos);
}

TEST(IntervalStats, Bounds) {
  C4 c;
  IntervalStats st = interval_stats(c.scheme, c.graph.edge_count());
  EXPECT_TRUE(st.ok());
  EXPECT_EQ(st.max_intervals_per_arc, 1);
  EXPECT_EQ(st.max_double_labeled_arcs, 0);
  EXPECT_EQ(interval_stats(c.scheme).bound, 12);

  c.set(0, 1, {{1, 1}, {2, 2}});
  st = interval_stats(c.scheme);
  EXPECT_TRUE(st.ok());
  EXPECT_EQ(st.double_labeled_arcs[0], 1);

  c.set(0, 3, {{3, 3}, {2, 2}});
  st = interval_stats(c.scheme);
  EXPECT_FALSE(st.per_vertex_ok);
  EXPECT_EQ(st.max_double_labeled_arcs, 2);

  c.set(1, 2, {{2, 2}, {3, 3}, {0, 0}});
  st = interval_stats(c.scheme);
  EXPECT_FALSE(st.per_arc_ok);
  EXPECT_EQ(st.max_intervals_per_arc, 3);
}

TEST(Route, C4) {
  C4 c;
  EXPECT_EQ(route(c.scheme, c.graph, 0, 2), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(route(c.scheme, c.graph, 0, 1), (std::vector<int>{0, 1}));
  const RouteSweep sweep = route_all_pairs(c.scheme, c.graph);
  EXPECT_EQ(sweep.pairs, 12);
  EXPECT_TRUE(sweep.ok());
}

TEST(Route, Failures) {
  {
    C4 c;
    c.set(0, 3, {});
    EXPECT_THROW(route(c.scheme, c.graph, 0, 3), Error);
  }
  {
    C4 c;
    c.set(0, 3, {{2, 3}});
    EXPECT_THROW(route(c.scheme, c.graph, 0, 2), Error);
  }
  {
    // v0 sends v2 to v1, which sends it back.
    C4 c;
    c.set(1, 0, {{0, 0}, {2, 2}});
    c.set(1, 2, {{3, 3}});
    try {
      route(c.scheme, c.graph, 0, 2);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kRouteFailure);
    }
    EXPECT_GT(route_all_pairs(c.scheme, c.graph).failed, 0);
  }
}

}  // namespace
}  // namespace carc
