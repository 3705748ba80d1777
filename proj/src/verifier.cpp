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

#include "carc/verifier.hpp"

#include <algorithm>
#include <thread>

#include "carc/error.hpp"
#include "json.hpp"

namespace carc {

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kStrictness: return "strictness";
    case ViolationKind::kDisjointness: return "disjointness";
    case ViolationKind::kCoverage: return "coverage";
    case ViolationKind::kShortestPath: return "shortest_path";
  }
  return "unknown";
}

IntervalStats interval_stats(const RoutingScheme& scheme) {
  std::int64_t arcs = 0;
  for (int v = 0; v < scheme.vertex_count(); ++v) arcs += static_cast<std::int64_t>(scheme.arcs(v).size());
  return interval_stats(scheme, arcs / 2);
}

IntervalStats interval_stats(const RoutingScheme& scheme, std::int64_t edge_count) {
  IntervalStats s;
  const int n = scheme.vertex_count();
  s.double_labeled_arcs.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (const ArcLabel& arc : scheme.arcs(v)) {
      const int k = static_cast<int>(arc.intervals.size());
      s.total_intervals += k;
      s.max_intervals_per_arc = std::max(s.max_intervals_per_arc, k);
      if (k >= 2) ++s.double_labeled_arcs[static_cast<std::size_t>(v)];
    }
    s.max_double_labeled_arcs = std::max(s.max_double_labeled_arcs, s.double_labeled_arcs[static_cast<std::size_t>(v)]);
  }
  s.bound = 2 * edge_count + n;
  s.total_ok = s.total_intervals <= s.bound;
  s.per_arc_ok = s.max_intervals_per_arc <= 2;
  s.per_vertex_ok = s.max_double_labeled_arcs <= 1;
  return s;
}

namespace {

void check_structure(const Graph& graph, const RoutingScheme& scheme) {
  if (scheme.vertex_count() != graph.size()) {
    throw Error(ErrorCode::kStructural, "scheme covers " + std::to_string(scheme.vertex_count()) +
                                            " vertices, graph has " + std::to_string(graph.size()));
  }
  for (int v = 0; v < scheme.vertex_count(); ++v) {
    for (const ArcLabel& arc : scheme.arcs(v)) {
      if (arc.target < 0 || arc.target >= graph.size() || arc.target == v || !graph.adjacent(v, arc.target)) {
        throw Error(ErrorCode::kStructural,
                    "scheme labels " + std::to_string(v) + "->" + std::to_string(arc.target) + ", which is not an edge");
      }
    }
  }
}

std::string arc_name(int v, int w) { return std::to_string(v) + "->" + std::to_string(w); }

void verify_vertex(const RoutingScheme& scheme, const DistanceMatrix& dist,
                   const VerifyOptions& options, int v, std::vector<Violation>& out) {
  const CyclicOrder& L = scheme.order();
  const int n = L.size();
  // Coverage count per position in L, via a difference array.
  std::vector<int> diff(static_cast<std::size_t>(n) + 1, 0);
  for (const ArcLabel& arc : scheme.arcs(v)) {
    for (const RingInterval& ivl : arc.intervals) {
      const int a = L.position(ivl.from);
      const int b = L.position(ivl.to);
      ++diff[static_cast<std::size_t>(a)];
      --diff[static_cast<std::size_t>(b) + 1];
      if (a > b) {
        ++diff[0];
        --diff[static_cast<std::size_t>(n)];
      }
    }
  }
  auto holders = [&](int u) {
    std::string s;
    for (const ArcLabel& arc : scheme.arcs(v)) {
      for (const RingInterval& ivl : arc.intervals) {
        if (L.interval_contains(ivl, u)) {
          s += (s.empty() ? "" : ", ") + arc_name(v, arc.target) + " [" + std::to_string(ivl.from) + "," +
               std::to_string(ivl.to) + "]";
        }
      }
    }
    return s;
  };
  int count = 0;
  for (int p = 0; p < n; ++p) {
    count += diff[static_cast<std::size_t>(p)];
    const int u = L.at(p);
    if (u == v) {
      if (options.strict && count > 0) {
        out.push_back({ViolationKind::kStrictness, v, -1, v, "own id inside " + holders(u)});
      } else if (count > 1) {
        out.push_back({ViolationKind::kDisjointness, v, -1, v, "covered by " + holders(u)});
      }
      continue;
    }
    if (count == 0) {
      out.push_back({ViolationKind::kCoverage, v, -1, u, "no outgoing interval contains it"});
    } else if (count > 1) {
      out.push_back({ViolationKind::kDisjointness, v, -1, u, "covered by " + holders(u)});
    }
  }
  for (const ArcLabel& arc : scheme.arcs(v)) {
    const int w = arc.target;
    for (const RingInterval& ivl : arc.intervals) {
      for (int p = L.position(ivl.from), steps = L.interval_size(ivl); steps > 0; --steps, p = p + 1 == n ? 0 : p + 1) {
        const int u = L.at(p);
        if (u == v) continue;
        const int d = dist(v, u);
        if (d == kUnreachableDistance || dist(w, u) != d - 1) {
          out.push_back({ViolationKind::kShortestPath, v, w, u,
                         arc_name(v, w) + " is not on a shortest path to " + std::to_string(u) + " (dist " +
                             std::to_string(d) + " vs " + std::to_string(dist(w, u)) + " from " + std::to_string(w) + ")"});
        }
      }
    }
  }
}

}  // namespace

VerificationReport verify_scheme(const Graph& graph, const RoutingScheme& scheme, const VerifyOptions& options) {
  check_structure(graph, scheme);
  const DistanceMatrix dist(graph);
  const int n = graph.size();
  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, n));

  std::vector<std::vector<Violation>> partial(static_cast<std::size_t>(threads));
  auto work = [&](int t) {
    for (int v = t; v < n; v += threads) verify_vertex(scheme, dist, options, v, partial[static_cast<std::size_t>(t)]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  for (auto& part : partial) {
    report.violations.insert(report.violations.end(), std::make_move_iterator(part.begin()),
                             std::make_move_iterator(part.end()));
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.vertex < b.vertex; });
  for (const Violation& x : report.violations) {
    switch (x.kind) {
      case ViolationKind::kStrictness: report.strictness_ok = false; break;
      case ViolationKind::kDisjointness: report.disjoint_ok = false; break;
      case ViolationKind::kCoverage: report.coverage_ok = false; break;
      case ViolationKind::kShortestPath: report.shortest_ok = false; break;
    }
  }
  report.stats = interval_stats(scheme, graph.edge_count());
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["passed"] = report.passed();
  doc["strictness_ok"] = report.strictness_ok;
  doc["disjoint_ok"] = report.disjoint_ok;
  doc["coverage_ok"] = report.coverage_ok;
  doc["shortest_ok"] = report.shortest_ok;
  const IntervalStats& s = report.stats;
  nlohmann::ordered_json stats;
  stats["total_intervals"] = s.total_intervals;
  stats["bound"] = s.bound;
  stats["max_intervals_per_arc"] = s.max_intervals_per_arc;
  stats["max_double_labeled_arcs_per_vertex"] = s.max_double_labeled_arcs;
  stats["double_labeled_arcs_per_vertex"] = s.double_labeled_arcs;
  stats["total_ok"] = s.total_ok;
  stats["per_arc_ok"] = s.per_arc_ok;
  stats["per_vertex_ok"] = s.per_vertex_ok;
  doc["stats"] = std::move(stats);
  auto list = nlohmann::ordered_json::array();
  for (const Violation& x : report.violations) {
    nlohmann::ordered_json item;
    item["kind"] = violation_kind_name(x.kind);
    item["vertex"] = x.vertex;
    if (x.target >= 0) item["arc"] = arc_name(x.vertex, x.target);
    item["destination"] = x.destination;
    item["detail"] = x.detail;
    list.push_back(std::move(item));
  }
  doc["violations"] = std::move(list);
  return doc.dump(2);
}

std::vector<int> route(const RoutingScheme& scheme, const Graph& graph, int src, int dst) {
  const int n = graph.size();
  if (scheme.vertex_count() != n) throw Error(ErrorCode::kStructural, "scheme does not match graph");
  if (src < 0 || src >= n || dst < 0 || dst >= n) throw Error(ErrorCode::kInvalidArgument, "route endpoint out of range");
  if (src == dst) throw Error(ErrorCode::kInvalidArgument, "route needs distinct endpoints");
  const CyclicOrder& L = scheme.order();
  std::vector<int> path{src};
  int x = src;
  for (int hops = 0; x != dst; ++hops) {
    if (hops >= n) {
      throw Error(ErrorCode::kRouteFailure, "route " + std::to_string(src) + "->" + std::to_string(dst) + " loops");
    }
    int next = -1;
    for (const ArcLabel& arc : scheme.arcs(x)) {
      const bool hit = std::any_of(arc.intervals.begin(), arc.intervals.end(),
                                   [&](const RingInterval& ivl) { return L.interval_contains(ivl, dst); });
      if (!hit) continue;
      if (next != -1) {
        throw Error(ErrorCode::kRouteFailure, "vertex " + std::to_string(x) + " has two arcs towards " + std::to_string(dst));
      }
      next = arc.target;
    }
    if (next == -1) {
      throw Error(ErrorCode::kRouteFailure, "vertex " + std::to_string(x) + " has no arc towards " + std::to_string(dst));
    }
    if (!graph.adjacent(x, next)) throw Error(ErrorCode::kStructural, "route uses a non-edge");
    path.push_back(next);
    x = next;
  }
  return path;
}

RouteSweep route_all_pairs(const RoutingScheme& scheme, const Graph& graph) {
  const int n = graph.size();
  if (scheme.vertex_count() != n) throw Error(ErrorCode::kStructural, "scheme does not match graph");
  const CyclicOrder& L = scheme.order();
  constexpr int kHole = -1;
  constexpr int kAmbiguous = -2;
  // next_hop[x*n + u]: arc target used at x for destination u.
  std::vector<int> next_hop(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kHole);
  for (int x = 0; x < n; ++x) {
    int* row = next_hop.data() + static_cast<std::size_t>(x) * static_cast<std::size_t>(n);
    for (const ArcLabel& arc : scheme.arcs(x)) {
      for (const RingInterval& ivl : arc.intervals) {
        for (int p = L.position(ivl.from), steps = L.interval_size(ivl); steps > 0; --steps, p = p + 1 == n ? 0 : p + 1) {
          int& slot = row[L.at(p)];
          slot = slot == kHole ? arc.target : kAmbiguous;
        }
      }
    }
  }
  RouteSweep sweep;
  for (int s = 0; s < n; ++s) {
    const auto dist = bfs_distances(graph, s);
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      ++sweep.pairs;
      int x = s;
      int hops = 0;
      bool failed = false;
      while (x != t) {
        const int nx = next_hop[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(t)];
        if (nx < 0 || hops >= n) {
          failed = true;
          break;
        }
        x = nx;
        ++hops;
      }
      if (failed) {
        ++sweep.failed;
        if (sweep.examples.size() < 8) sweep.examples.push_back("route " + std::to_string(s) + "->" + std::to_string(t) + " fails");
      } else if (hops != dist[static_cast<std::size_t>(t)]) {
        ++sweep.non_shortest;
        if (sweep.examples.size() < 8) {
          sweep.examples.push_back("route " + std::to_string(s) + "->" + std::to_string(t) + " takes " +
                                   std::to_string(hops) + " hops, distance " + std::to_string(dist[static_cast<std::size_t>(t)]));
        }
      }
    }
  }
  return sweep;
}

}  // namespace carc
