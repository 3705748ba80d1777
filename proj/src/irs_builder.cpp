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

#include "carc/irs_builder.hpp"

#include <algorithm>
#include <string>

#include "carc/error.hpp"

namespace carc {

namespace {

[[noreturn]] void internal(int v, const std::string& what) {
  throw Error(ErrorCode::kInternal, "vertex " + std::to_string(v) + ": " + what);
}

// a is a subset of b, both proper ring-intervals of `order`.
bool ring_subset(const CyclicOrder& order, RingInterval a, RingInterval b) {
  if (!order.interval_contains(b, a.from)) return false;
  return order.distance(b.from, a.from) + order.interval_size(a) <= order.interval_size(b);
}

}  // namespace

std::string_view face_case_name(FaceCase c) {
  switch (c) {
    case FaceCase::kDominatingVertex: return "dominating_vertex";
    case FaceCase::kEmpty: return "empty";
    case FaceCase::kSeparator: return "separator";
    case FaceCase::kDominatingInside: return "dominating_inside";
    case FaceCase::kCounterOrDominating: return "counter_or_dominating";
    case FaceCase::kCoveringNeighbour: return "covering_neighbour";
    case FaceCase::kSplitAtRightTail: return "split_at_right_tail";
    case FaceCase::kRightOnly: return "right_only";
    case FaceCase::kLeftOnly: return "left_only";
  }
  return "unknown";
}

VertexOrder build_vertex_order(const CliqueCycle& cycle) {
  const int k = cycle.clique_count();
  const int n = cycle.vertex_count();
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(k));
  for (int v = 0; v < n; ++v) groups[static_cast<std::size_t>(cycle.left_clique(v))].push_back(v);

  VertexOrder out;
  out.head.assign(static_cast<std::size_t>(k), -1);
  out.tail.assign(static_cast<std::size_t>(k), -1);
  std::vector<int> items;
  items.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < k; ++c) {
    auto& group = groups[static_cast<std::size_t>(c)];
    // Everyone later in a group reaches at least as far to the right.
    std::sort(group.begin(), group.end(), [&](int a, int b) {
      const int ra = cycle.steps(c, cycle.right_clique(a));
      const int rb = cycle.steps(c, cycle.right_clique(b));
      return ra != rb ? ra < rb : a < b;
    });
    if (group.empty()) continue;
    out.head[static_cast<std::size_t>(c)] = group.front();
    out.tail[static_cast<std::size_t>(c)] = group.back();
    items.insert(items.end(), group.begin(), group.end());
  }
  out.order = CyclicOrder(std::move(items));
  return out;
}

SchemeBuilder::SchemeBuilder(const Graph& graph, const CliqueCycle& cycle)
    : graph_(graph), cycle_(cycle), order_(build_vertex_order(cycle)) {
  const int n = graph.size();
  has_counter_.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (cycle.is_dominating(v)) dominating_.push_back(v);
    for (int w : graph.neighbors(v)) {
      if (cycle.are_counter(v, w)) {
        has_counter_[static_cast<std::size_t>(v)] = 1;
        has_counter_pair_ = true;
        break;
      }
    }
  }
  if (!has_dominating() && !has_counter_pair_) {
    chain_left_.resize(static_cast<std::size_t>(n));
    chain_right_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const VertexFrame f = compute_frame(v);
      const int r = right_vertex(f);
      chain_left_[static_cast<std::size_t>(v)] = f.left && left_advances(v, *f.left) ? *f.left : -1;
      chain_right_[static_cast<std::size_t>(v)] = right_advances(v, r) ? r : -1;
    }
  }
}

int SchemeBuilder::tail_through(int c) const {
  const int k = cycle_.clique_count();
  for (int i = 0; i < k; ++i) {
    const int t = order_.tail[static_cast<std::size_t>(((c - i) % k + k) % k)];
    if (t != -1) return t;
  }
  throw Error(ErrorCode::kInternal, "vertex order without groups");
}

int SchemeBuilder::left_vertex_of(int v) const {
  const CyclicOrder& L = order();
  const CyclicOrder& C = cycle_.cliques();
  const RingInterval span = cycle_.span(v);
  int best = -1;
  int best_dist = -1;
  auto offer = [&](int w) {
    const int d = L.distance(w, v);
    if (d > best_dist) {
      best = w;
      best_dist = d;
    }
  };
  const int head = order_.head[static_cast<std::size_t>(cycle_.left_clique(v))];
  if (head != v) offer(head);
  for (int w : graph_.neighbors(v)) {
    if (cycle_.is_dominating(w) || cycle_.are_counter(v, w)) continue;
    // For adjacent non-counter vertices, w reaches further to the left
    // exactly when its left clique lies outside v's span.
    if (!C.interval_contains(span, cycle_.left_clique(w))) offer(w);
  }
  return best;
}

int SchemeBuilder::right_reach(int v, int w) const {
  return cycle_.steps(cycle_.left_clique(v), cycle_.right_clique(w));
}

bool SchemeBuilder::left_advances(int v, int l) const {
  return cycle_.left_clique(l) != cycle_.left_clique(v);
}

bool SchemeBuilder::right_advances(int v, int r) const {
  return right_reach(v, r) > cycle_.steps(cycle_.left_clique(v), cycle_.right_clique(v));
}

VertexFrame SchemeBuilder::compute_frame(int v) const {
  if (cycle_.is_dominating(v)) {
    throw Error(ErrorCode::kContractViolation,
                "frame requested for dominating vertex " + std::to_string(v));
  }
  const CyclicOrder& L = order();
  VertexFrame f;
  f.v = v;
  f.middle = tail_through(cycle_.right_clique(v));
  if (const int l = left_vertex_of(v); l != -1) f.left = l;
  if (f.middle != v) f.right_of = RingInterval{L.successor(v), f.middle};
  const int after_middle = L.successor(f.middle);
  if (f.left) {
    f.left_of = RingInterval{*f.left, L.predecessor(v)};
    if (after_middle != *f.left) f.face_to_face = RingInterval{after_middle, L.predecessor(*f.left)};
  } else if (after_middle != v) {
    f.face_to_face = RingInterval{after_middle, L.predecessor(v)};
  }
  return f;
}

void SchemeBuilder::check_frame(const VertexFrame& f) const {
  const CyclicOrder& L = order();
  int total = 0;
  for (const auto& part : {f.right_of, f.face_to_face, f.left_of}) {
    if (part) total += L.interval_size(*part);
  }
  if (total != L.size() - 1) internal(f.v, "right/face-to-face/left blocks do not partition V-{v}");
  if (f.right_of) {
    for (int w : L.ring_sequence(*f.right_of)) {
      if (!graph_.adjacent(f.v, w)) internal(f.v, "vertex " + std::to_string(w) + " to the right is not adjacent");
    }
  }
  if (f.face_to_face) {
    for (int w : L.ring_sequence(*f.face_to_face)) {
      if (!cycle_.is_dominating(w) && graph_.adjacent(f.v, w)) {
        internal(f.v, "face-to-face vertex " + std::to_string(w) + " is adjacent");
      }
    }
  }
}

int SchemeBuilder::right_vertex(const VertexFrame& frame) const {
  const int v = frame.v;
  int best_reach = -1;
  for (int w : graph_.neighbors(v)) best_reach = std::max(best_reach, right_reach(v, w));
  if (best_reach < 0) internal(v, "no neighbours");
  auto farthest = [&](int w) { return w != v && graph_.adjacent(v, w) && right_reach(v, w) == best_reach; };
  if (frame.left && farthest(*frame.left)) return *frame.left;
  if (farthest(frame.middle)) return frame.middle;
  const CyclicOrder& L = order();
  int best = -1;
  for (int w : graph_.neighbors(v)) {
    if (farthest(w) && (best == -1 || L.distance(v, w) < L.distance(v, best))) best = w;
  }
  return best;
}

int SchemeBuilder::apex_number(const VertexFrame& frame) const {
  if (has_dominating() || has_counter_pair_) {
    throw Error(ErrorCode::kContractViolation, "apex number needs a graph without dominating and counter vertices");
  }
  if (!frame.left || !frame.right) internal(frame.v, "apex number without left/right vertex");
  // A chain that stops at step i-1 counts as meeting at i: nothing beyond
  // the neighbours of its last vertex is reached in that direction.
  const CyclicOrder& C = cycle_.cliques();
  const int l1 = *frame.left;
  const int r1 = *frame.right;
  if (cycle_.left_clique(l1) == cycle_.right_clique(r1)) return 1;
  const RingInterval behind{cycle_.right_clique(r1), cycle_.left_clique(l1)};
  const RingInterval span = cycle_.span(frame.v);
  if (ring_subset(C, span, behind) && C.interval_size(span) < C.interval_size(behind)) return 1;

  int l = l1;
  int r = r1;
  for (int i = 2; i <= graph_.size() + 1; ++i) {
    l = chain_left_[static_cast<std::size_t>(l)];
    r = chain_right_[static_cast<std::size_t>(r)];
    if (l == -1 || r == -1) return i;
    if (l == r || graph_.adjacent(l, r)) return i;
  }
  internal(frame.v, "left and right chains never meet");
}

int SchemeBuilder::separator(const VertexFrame& frame, int apex) const {
  const CyclicOrder& L = order();
  if (!frame.face_to_face || !frame.left || !frame.right) internal(frame.v, "separator without face-to-face block");
  const int l1 = *frame.left;
  if (apex == 1) return L.predecessor(l1);

  int l_prev = l1;
  int r_prev = *frame.right;
  for (int i = 2; i < apex; ++i) {
    l_prev = chain_left_[static_cast<std::size_t>(l_prev)];
    r_prev = chain_right_[static_cast<std::size_t>(r_prev)];
    if (l_prev == -1 || r_prev == -1) internal(frame.v, "left/right chain ended before the apex");
  }
  const int b0 = frame.face_to_face->from;
  const int len = L.interval_size(*frame.face_to_face);
  const int start = L.successor(tail_through(cycle_.right_clique(r_prev)));
  const int start_offset = L.distance(b0, start);
  if (start_offset > len) internal(frame.v, "separator scan starts outside the face-to-face block");
  // Right chain ended: what r^(i-1) does not reach belongs to the left.
  if (chain_right_[static_cast<std::size_t>(r_prev)] == -1 && chain_left_[static_cast<std::size_t>(l_prev)] != -1) {
    return L.predecessor(start);
  }
  int u = start;
  for (int steps = start_offset; steps < len; ++steps) {
    if (u == l_prev || graph_.adjacent(u, l_prev)) break;
    u = L.successor(u);
  }
  return L.predecessor(u);
}

void SchemeBuilder::label_right(const VertexFrame& frame, RoutingScheme& scheme) const {
  if (!frame.right_of) return;
  for (int w : order().ring_sequence(*frame.right_of)) scheme.assign(frame.v, w, {w, w});
}

void SchemeBuilder::label_left(const VertexFrame& frame, RoutingScheme& scheme) const {
  if (!frame.left_of) return;
  const CyclicOrder& L = order();
  const auto seq = L.ring_sequence(*frame.left_of);
  int run_start = seq.front();  // l_v is adjacent to v
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (graph_.adjacent(frame.v, seq[i])) {
      scheme.assign(frame.v, run_start, {run_start, seq[i - 1]});
      run_start = seq[i];
    }
  }
  scheme.assign(frame.v, run_start, {run_start, seq.back()});
}

bool SchemeBuilder::covers_left_cliques(int y, RingInterval block) const {
  const CyclicOrder& L = order();
  const CyclicOrder& C = cycle_.cliques();
  const int first = cycle_.left_clique(block.from);
  const int last = cycle_.left_clique(block.to);
  // A block that starts and ends in one group but runs through all the
  // others spans every clique.
  if (first == last && L.distance(block.from, block.to) >
                           L.distance(order_.head[static_cast<std::size_t>(first)], block.to)) {
    return false;
  }
  return ring_subset(C, {first, last}, cycle_.membership(y));
}

FaceCase SchemeBuilder::label_face_to_face(VertexFrame& frame, RoutingScheme& scheme) const {
  if (!frame.face_to_face) return FaceCase::kEmpty;
  const CyclicOrder& L = order();
  const int v = frame.v;
  const RingInterval block = *frame.face_to_face;
  const auto seq = L.ring_sequence(block);

  if (has_dominating()) {
    int d_left = -1;
    int d_right = -1;
    for (int x : seq) {
      if (!cycle_.is_dominating(x)) continue;
      if (d_left == -1) d_left = x;
      d_right = x;
    }
    if (d_left != -1) {
      scheme.assign(v, d_left, {block.from, d_left});
      for (int x = L.successor(d_left); x != d_right && d_left != d_right; x = L.successor(x)) {
        scheme.assign(v, x, {x, x});
      }
      if (d_right != d_left) {
        scheme.assign(v, d_right, {d_right, block.to});
      } else if (d_left != block.to) {
        scheme.assign(v, d_left, {L.successor(d_left), block.to});
      }
      return FaceCase::kDominatingInside;
    }
  }

  if (has_dominating() || has_counter_[static_cast<std::size_t>(v)]) {
    auto candidate = [&](int u) {
      return u != v && graph_.adjacent(v, u) && (cycle_.is_dominating(u) || cycle_.are_counter(v, u));
    };
    int u = -1;
    if (candidate(frame.middle)) {
      u = frame.middle;
    } else {
      for (int w : graph_.neighbors(v)) {
        if (candidate(w)) {
          u = w;
          break;
        }
      }
    }
    if (u == -1) internal(v, "no counter or dominating vertex to route through");
    scheme.assign(v, u, block);
    return FaceCase::kCounterOrDominating;
  }

  frame.right = right_vertex(frame);
  if (!frame.left || (!has_counter_pair_ && !left_advances(v, *frame.left))) {
    scheme.assign(v, *frame.right, block);
    return FaceCase::kRightOnly;
  }
  const int l = *frame.left;

  if (!has_counter_pair_) {
    if (!right_advances(v, *frame.right)) {
      scheme.assign(v, l, block);
      return FaceCase::kLeftOnly;
    }
    frame.apex = apex_number(frame);
    frame.separator = separator(frame, *frame.apex);
    const int s = *frame.separator;
    const int len = L.interval_size(block);
    if (L.distance(block.from, s) < len) scheme.assign(v, *frame.right, {block.from, s});
    if (L.successor(s) != l) scheme.assign(v, l, {L.successor(s), L.predecessor(l)});
    return FaceCase::kSeparator;
  }

  // Counter vertices exist elsewhere. First look for a neighbour whose arc
  // holds the left clique of every face-to-face vertex.
  std::vector<int> preferred{l};
  if (frame.middle != v) preferred.push_back(frame.middle);
  for (int y : preferred) {
    if (covers_left_cliques(y, block)) {
      scheme.assign(v, y, block);
      return FaceCase::kCoveringNeighbour;
    }
  }
  for (int y : graph_.neighbors(v)) {
    if (covers_left_cliques(y, block)) {
      scheme.assign(v, y, block);
      return FaceCase::kCoveringNeighbour;
    }
  }

  // Otherwise split at the tail of the farthest-right neighbour's right clique.
  const int r = right_vertex(frame);
  frame.right = r;
  const int right_tail = tail_through(cycle_.right_clique(r));
  const int len = L.interval_size(block);
  const int offset = L.distance(block.from, right_tail);
  if (offset >= len) {
    scheme.assign(v, r, block);
  } else {
    scheme.assign(v, r, {block.from, right_tail});
    if (L.successor(right_tail) != l) scheme.assign(v, l, {L.successor(right_tail), block.to});
  }
  return FaceCase::kSplitAtRightTail;
}

RoutingScheme SchemeBuilder::empty_scheme() const {
  const int n = graph_.size();
  std::vector<std::vector<ArcLabel>> arcs(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (int w : graph_.neighbors(v)) arcs[static_cast<std::size_t>(v)].push_back({w, {}});
  }
  return RoutingScheme(order(), std::move(arcs));
}

FaceCase SchemeBuilder::label_vertex(int v, RoutingScheme& scheme) const {
  if (cycle_.is_dominating(v)) {
    for (int w : graph_.neighbors(v)) scheme.assign(v, w, {w, w});
    return FaceCase::kDominatingVertex;
  }
  VertexFrame frame = compute_frame(v);
  check_frame(frame);
  label_right(frame, scheme);
  label_left(frame, scheme);
  const FaceCase used = label_face_to_face(frame, scheme);
  scheme.compress(v);
  return used;
}

RoutingScheme SchemeBuilder::build() const {
  std::vector<FaceCase> cases;
  return build(cases);
}

RoutingScheme SchemeBuilder::build(std::vector<FaceCase>& cases) const {
  RoutingScheme scheme = empty_scheme();
  cases.assign(static_cast<std::size_t>(graph_.size()), FaceCase::kEmpty);
  for (int v = 0; v < graph_.size(); ++v) cases[static_cast<std::size_t>(v)] = label_vertex(v, scheme);
  return scheme;
}

RoutingScheme build_scheme(const ArcModel& model) {
  validate_model(model);
  if (!is_real(model)) throw Error(ErrorCode::kNotRealCircularArc, "not a real circular-arc model");
  const Graph graph = intersection_graph(model);
  const CliqueCycle cycle = build_clique_cycle(model, graph);
  return SchemeBuilder(graph, cycle).build();
}

}  // namespace carc
