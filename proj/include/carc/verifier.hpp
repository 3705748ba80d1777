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

#ifndef CARC_VERIFIER_HPP_
#define CARC_VERIFIER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "carc/arc_model.hpp"
#include "carc/routing_scheme.hpp"

namespace carc {

enum class ViolationKind { kStrictness, kDisjointness, kCoverage, kShortestPath };

struct Violation {
  ViolationKind kind;
  int vertex = -1;       // the routing vertex v
  int target = -1;       // w of the offending arc (v,w), if any
  int destination = -1;  // the destination u concerned
  std::string detail;
};

struct IntervalStats {
  std::int64_t total_intervals = 0;
  int max_intervals_per_arc = 0;
  // Outgoing arcs carrying two or more intervals, per vertex.
  std::vector<int> double_labeled_arcs;
  int max_double_labeled_arcs = 0;
  std::int64_t bound = 0;  // 2m + n
  bool total_ok = true;
  bool per_arc_ok = true;
  bool per_vertex_ok = true;

  bool ok() const { return total_ok && per_arc_ok && per_vertex_ok; }
};

// Counts intervals and checks them against total <= 2m + n, at most two per
// arc and at most one double-labelled arc per vertex. m is taken as half the
// number of arcs listed in the scheme unless given.
IntervalStats interval_stats(const RoutingScheme& scheme);
IntervalStats interval_stats(const RoutingScheme& scheme, std::int64_t edge_count);

struct VerifyOptions {
  // Forbid a vertex's own id inside its outgoing intervals.
  bool strict = true;
  // Worker threads; 0 picks the hardware concurrency.
  int threads = 1;
};

struct VerificationReport {
  bool strictness_ok = true;
  bool disjoint_ok = true;
  bool coverage_ok = true;
  bool shortest_ok = true;
  std::vector<Violation> violations;
  IntervalStats stats;

  bool passed() const { return strictness_ok && disjoint_ok && coverage_ok && shortest_ok; }
};

std::string_view violation_kind_name(ViolationKind kind);

// Checks the scheme against the graph alone: per vertex v, outgoing
// intervals pairwise disjoint, every u != v covered, v itself uncovered
// (strict mode), and every u on arc (v,w) has w as a first vertex from v to u.
// Every violation is reported. Throws kStructural when the scheme does not
// fit the graph (vertex count, arcs that are not edges).
VerificationReport verify_scheme(const Graph& graph, const RoutingScheme& scheme,
                                 const VerifyOptions& options = {});

std::string report_to_json(const VerificationReport& report);

// Follows the scheme hop by hop from src to dst. Throws kRouteFailure on a
// coverage hole, an ambiguous hop or a loop (more than n hops).
std::vector<int> route(const RoutingScheme& scheme, const Graph& graph, int src, int dst);

struct RouteSweep {
  std::int64_t pairs = 0;
  std::int64_t failed = 0;        // holes, ambiguities, loops
  std::int64_t non_shortest = 0;  // delivered, but longer than the distance
  std::vector<std::string> examples;  // first few problems, for diagnostics

  bool ok() const { return failed == 0 && non_shortest == 0; }
};

// Routes every ordered pair and compares hop counts with BFS distances.
RouteSweep route_all_pairs(const RoutingScheme& scheme, const Graph& graph);

}  // namespace carc

#endif  // CARC_VERIFIER_HPP_
