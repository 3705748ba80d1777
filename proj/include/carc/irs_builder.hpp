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

#ifndef CARC_IRS_BUILDER_HPP_
#define CARC_IRS_BUILDER_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "carc/arc_model.hpp"
#include "carc/clique_cycle.hpp"
#include "carc/ring_order.hpp"
#include "carc/routing_scheme.hpp"

namespace carc {

// Cyclic vertex order: vertices grouped by left clique (cliques in cyclic
// order starting at clique 0), each group sorted by increasing right reach,
// true twins by id.
struct VertexOrder {
  CyclicOrder order;
  // First and last vertex whose left clique is c; -1 for an empty group.
  std::vector<int> head;
  std::vector<int> tail;
};

VertexOrder build_vertex_order(const CliqueCycle& cycle);

// Per-vertex quantities steering the labelling of v's outgoing arcs.
// right_of / face_to_face / left_of partition every vertex except v.
struct VertexFrame {
  int v = -1;
  std::optional<int> left;    // l_v
  int middle = -1;            // m_v
  std::optional<int> right;   // r_v, only without dominating/counter vertices
  std::optional<RingInterval> right_of;      // A_v
  std::optional<RingInterval> face_to_face;  // B_v
  std::optional<RingInterval> left_of;       // C_v
  std::optional<int> apex;
  std::optional<int> separator;  // s_v
};

// Which labelling route was taken for a vertex's face-to-face block.
enum class FaceCase {
  kDominatingVertex,  // v itself dominating: one singleton per arc
  kEmpty,             // B_v is empty
  kSeparator,         // no dominating or counter vertices in the graph
  kDominatingInside,  // dominating vertices inside B_v
  kCounterOrDominating,
  kCoveringNeighbour,  // some pair of counter vertices exists elsewhere
  kSplitAtRightTail,
  kRightOnly,  // nothing reaches further left than v: all of B_v goes to r_v
  kLeftOnly,   // nothing reaches further right than v: all of B_v goes to l_v
};

std::string_view face_case_name(FaceCase c);

// Holds the immutable inputs (graph, clique-cycle, vertex order) and the
// graph-wide facts the case analysis depends on. Construction and per-vertex
// queries are exposed individually so each step can be checked in isolation.
class SchemeBuilder {
 public:
  SchemeBuilder(const Graph& graph, const CliqueCycle& cycle);

  const Graph& graph() const { return graph_; }
  const CliqueCycle& cycle() const { return cycle_; }
  const VertexOrder& vertex_order() const { return order_; }
  const CyclicOrder& order() const { return order_.order; }

  bool has_dominating() const { return !dominating_.empty(); }
  bool has_counter_pair() const { return has_counter_pair_; }

  // Last vertex, in L, of the nearest non-empty left-clique group at or
  // before clique c.
  int tail_through(int c) const;

  // Left, middle, partition. Throws kContractViolation for dominating v.
  VertexFrame compute_frame(int v) const;

  // Neighbour of v reaching farthest to the right, with ties broken towards
  // l_v, then m_v, then the first such vertex after v in L.
  int right_vertex(const VertexFrame& frame) const;
  // Requires a graph without dominating and counter vertices.
  int apex_number(const VertexFrame& frame) const;
  int separator(const VertexFrame& frame, int apex) const;

  void label_right(const VertexFrame& frame, RoutingScheme& scheme) const;
  void label_left(const VertexFrame& frame, RoutingScheme& scheme) const;
  FaceCase label_face_to_face(VertexFrame& frame, RoutingScheme& scheme) const;

  // Empty scheme over L with one (unlabelled) arc per directed edge.
  RoutingScheme empty_scheme() const;
  // Labels every outgoing arc of v; returns the face-to-face case used.
  FaceCase label_vertex(int v, RoutingScheme& scheme) const;
  RoutingScheme build() const;
  // Same as build(), also reporting the case used for every vertex.
  RoutingScheme build(std::vector<FaceCase>& cases) const;

 private:
  int left_vertex_of(int v) const;
  int right_reach(int v, int w) const;
  // Whether the left (right) vertex of v gets strictly further than v; if
  // not, no shortest path from v leaves in that direction.
  bool left_advances(int v, int l) const;
  bool right_advances(int v, int r) const;
  bool covers_left_cliques(int y, RingInterval block) const;
  void check_frame(const VertexFrame& frame) const;

  const Graph& graph_;
  const CliqueCycle& cycle_;
  VertexOrder order_;
  std::vector<int> dominating_;
  std::vector<char> has_counter_;
  bool has_counter_pair_ = false;
  // l(x) and r(x) for every x; filled only for graphs without dominating
  // and counter vertices, where the apex iteration needs them.
  std::vector<int> chain_left_;
  std::vector<int> chain_right_;
};

// Full pipeline from an arc model. Throws kNotRealCircularArc for models
// that leave part of the circle uncovered.
RoutingScheme build_scheme(const ArcModel& model);

}  // namespace carc

#endif  // CARC_IRS_BUILDER_HPP_
