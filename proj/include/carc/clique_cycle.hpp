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

#ifndef CARC_CLIQUE_CYCLE_HPP_
#define CARC_CLIQUE_CYCLE_HPP_

#include <span>
#include <string>
#include <vector>

#include "carc/arc_model.hpp"
#include "carc/ring_order.hpp"

namespace carc {

// Cyclically ordered point-cliques of an arc model (those maximal among all
// point-cliques), together with every vertex's left and right clique.
//
// Clique ids are 0..K-1 in clockwise order of their gaps, so the cyclic
// order on cliques is the identity order. A member set that is maximal at
// two separate points yields two ids; otherwise arcs overlapping at both
// ends would look like a single shared run.
// Dominating vertices get the unified span lc = C(z), rc = z with z = 0.
class CliqueCycle {
 public:
  int clique_count() const { return static_cast<int>(members_.size()); }
  int vertex_count() const { return static_cast<int>(left_.size()); }
  const CyclicOrder& cliques() const { return order_; }

  // Vertices of clique c, ascending.
  std::span<const int> members(int c) const { return members_[static_cast<std::size_t>(c)]; }
  // Gap at which clique c occurs.
  int gap_of(int c) const { return gap_[static_cast<std::size_t>(c)]; }

  int left_clique(int v) const { return left_[static_cast<std::size_t>(v)]; }
  int right_clique(int v) const { return right_[static_cast<std::size_t>(v)]; }
  RingInterval span(int v) const { return {left_clique(v), right_clique(v)}; }

  // The cliques that geometrically contain v; differs from span(v) only for
  // dominating vertices.
  RingInterval membership(int v) const { return membership_[static_cast<std::size_t>(v)]; }
  bool in_clique(int v, int c) const;
  bool is_dominating(int v) const { return dominating_[static_cast<std::size_t>(v)] != 0; }

  // The fixed clique z whose successor is the left clique of every
  // dominating vertex.
  int unification_clique() const { return 0; }

  // Clockwise steps from a to b in the clique order.
  int steps(int a, int b) const { return order_.distance(a, b); }

  // Neighbours w of v whose common cliques with v do not form one
  // ring-interval.
  std::vector<int> counter_vertices(const Graph& graph, int v) const;
  bool are_counter(int v, int w) const;

  friend CliqueCycle build_clique_cycle(const ArcModel& model, const Graph& graph);

 private:
  CyclicOrder order_;
  std::vector<std::vector<int>> members_;
  std::vector<int> gap_;
  std::vector<int> left_;
  std::vector<int> right_;
  std::vector<RingInterval> membership_;
  std::vector<char> dominating_;
};

// Throws kNotRealCircularArc when the model does not cover the circle.
CliqueCycle build_clique_cycle(const ArcModel& model, const Graph& graph);
CliqueCycle build_clique_cycle(const ArcModel& model);

enum class Reach { kFurther, kEqual, kLess };

// Whether w reaches further to the left than v, measured from clique `at`
// which must contain both. Throws kUndefinedComparison for counter vertices
// and kInvalidArgument when `at` misses one of them.
Reach reaches_further_left(const CliqueCycle& cycle, int v, int w, int at);
Reach reaches_further_right(const CliqueCycle& cycle, int v, int w, int at);

// One line per clique, "<id>: {a,b,...}", then one line per vertex,
// "<v>: lc=<id> rc=<id>".
std::string dump_clique_cycle(const CliqueCycle& cycle);

}  // namespace carc

#endif  // CARC_CLIQUE_CYCLE_HPP_
