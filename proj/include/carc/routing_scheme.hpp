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

#ifndef CARC_ROUTING_SCHEME_HPP_
#define CARC_ROUTING_SCHEME_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carc/ring_order.hpp"

namespace carc {

struct ArcLabel {
  int target = 0;
  std::vector<RingInterval> intervals;
};

// A vertex order plus, for every directed arc (v,w), a list of ring-intervals
// in that order. Arcs of each source are kept sorted by target.
class RoutingScheme {
 public:
  RoutingScheme() = default;
  RoutingScheme(CyclicOrder order, std::vector<std::vector<ArcLabel>> arcs);

  const CyclicOrder& order() const { return order_; }
  int vertex_count() const { return static_cast<int>(arcs_.size()); }
  std::span<const ArcLabel> arcs(int v) const { return arcs_[static_cast<std::size_t>(v)]; }

  // nullptr when (v,w) is not an arc of the scheme.
  const ArcLabel* find(int v, int w) const;
  ArcLabel* find(int v, int w);

  // Appends `ivl` to the labels of (v,w); throws kStructural for a missing arc.
  void assign(int v, int w, RingInterval ivl);

  // Joins adjacent disjoint intervals on every arc of v until no join applies.
  void compress(int v);

 private:
  CyclicOrder order_;
  std::vector<std::vector<ArcLabel>> arcs_;
};

// {"order":[...],"labels":{"v->w":[[a,b],...],...}} with arcs ascending by
// source, then target.
std::string scheme_to_json(const RoutingScheme& scheme);
// Throws kMalformedInput (syntax) or kStructural (bad ids, duplicate arcs).
RoutingScheme parse_scheme(std::string_view text);

}  // namespace carc

#endif  // CARC_ROUTING_SCHEME_HPP_
