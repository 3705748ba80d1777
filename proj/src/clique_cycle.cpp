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

#include "carc/clique_cycle.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "carc/error.hpp"

namespace carc {

namespace {

int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

// Two proper ring-intervals of clique ids (given by start and length) whose
// intersection splits into two separate runs.
bool splits_in_two(int start_a, int len_a, int start_b, int len_b, int k) {
  if (len_a >= k || len_b >= k) return false;
  const int d = mod(start_b - start_a, k);
  if (d < 1 || d > len_a - 1 || d + len_b - 1 < k) return false;
  const int wrapped_end = std::min(len_a - 1, d + len_b - 1 - k);
  return wrapped_end + 1 < d;
}

}  // namespace

bool CliqueCycle::in_clique(int v, int c) const {
  return order_.interval_contains(membership(v), c);
}

bool CliqueCycle::are_counter(int v, int w) const {
  if (v == w) return false;
  const RingInterval a = membership(v);
  const RingInterval b = membership(w);
  const int k = clique_count();
  return splits_in_two(a.from, steps(a.from, a.to) + 1, b.from, steps(b.from, b.to) + 1, k);
}

std::vector<int> CliqueCycle::counter_vertices(const Graph& graph, int v) const {
  std::vector<int> out;
  for (int w : graph.neighbors(v)) {
    if (are_counter(v, w)) out.push_back(w);
  }
  return out;
}

CliqueCycle build_clique_cycle(const ArcModel& model) {
  return build_clique_cycle(model, intersection_graph(model));
}

CliqueCycle build_clique_cycle(const ArcModel& model, const Graph& graph) {
  if (!is_real(model)) {
    throw Error(ErrorCode::kNotRealCircularArc, "not a real circular-arc model");
  }
  const int n = model.n;
  const int size = model.circle_size();

  // Every position holds exactly one endpoint: +1 for a start, -1 for an end.
  std::vector<int> event(static_cast<std::size_t>(size), 0);
  for (const Arc& a : model.arcs) {
    event[static_cast<std::size_t>(a.start)] = +1;
    event[static_cast<std::size_t>(a.end)] = -1;
  }
  // cover[g] = number of arcs over gap g.
  std::vector<int> cover(static_cast<std::size_t>(size), 0);
  {
    int c = 0;
    for (int v = 0; v < n; ++v) {
      if (model.arcs[static_cast<std::size_t>(v)].start > model.arcs[static_cast<std::size_t>(v)].end) ++c;
    }
    for (int g = 0; g < size; ++g) {
      c += event[static_cast<std::size_t>(g)];
      cover[static_cast<std::size_t>(g)] = c;
    }
  }

  // A gap clique can only be maximal when an arc starts just before it and
  // another ends just after it; every other gap clique is contained in a
  // neighbouring one.
  std::vector<int> survivors;
  std::vector<int> reach_cw(static_cast<std::size_t>(size) + 1);
  std::vector<int> reach_ccw(static_cast<std::size_t>(size) + 1);
  for (int g = 0; g < size; ++g) {
    if (event[static_cast<std::size_t>(g)] != +1 || event[static_cast<std::size_t>(mod(g + 1, size))] != -1) {
      continue;
    }
    // For each arc over g: how many further gaps it covers clockwise and
    // counter-clockwise. Gap g+t is covered by an arc iff t <= cw or
    // size - t <= ccw; no arc satisfies both since arcs miss at least one gap.
    std::fill(reach_cw.begin(), reach_cw.end(), 0);
    std::fill(reach_ccw.begin(), reach_ccw.end(), 0);
    for (int v = 0; v < n; ++v) {
      if (!model.covers_gap(v, g)) continue;
      const int offset = mod(g - model.arcs[static_cast<std::size_t>(v)].start, size);
      ++reach_cw[static_cast<std::size_t>(model.gap_count(v) - 1 - offset)];
      ++reach_ccw[static_cast<std::size_t>(offset)];
    }
    for (int t = size - 1; t >= 0; --t) {
      reach_cw[static_cast<std::size_t>(t)] += reach_cw[static_cast<std::size_t>(t) + 1];
      reach_ccw[static_cast<std::size_t>(t)] += reach_ccw[static_cast<std::size_t>(t) + 1];
    }
    const int own = cover[static_cast<std::size_t>(g)];
    bool keep = true;
    for (int t = 1; t < size && keep; ++t) {
      const int shared = reach_cw[static_cast<std::size_t>(t)] + reach_ccw[static_cast<std::size_t>(size - t)];
      if (shared != own) continue;
      const int other = mod(g + t, size);
      // Equal member sets at two peaks are separated by a dip on both sides
      // and stay as distinct occurrences.
      if (cover[static_cast<std::size_t>(other)] > own) keep = false;
    }
    if (keep) survivors.push_back(g);
  }
  const int k = static_cast<int>(survivors.size());
  if (k == 0) throw Error(ErrorCode::kInternal, "real model without point-cliques");

  CliqueCycle cycle;
  cycle.order_ = CyclicOrder::identity(k);
  cycle.gap_ = survivors;
  cycle.members_.assign(static_cast<std::size_t>(k), {});

  // next_clique[g]: first surviving clique at or after gap g (cyclic);
  // prev_clique[g]: last surviving clique at or before gap g.
  std::vector<int> next_clique(static_cast<std::size_t>(size));
  std::vector<int> prev_clique(static_cast<std::size_t>(size));
  {
    int idx = 0;
    for (int g = 0; g < size; ++g) {
      while (idx < k && survivors[static_cast<std::size_t>(idx)] < g) ++idx;
      next_clique[static_cast<std::size_t>(g)] = idx == k ? 0 : idx;
    }
    idx = k - 1;
    for (int g = size - 1; g >= 0; --g) {
      while (idx >= 0 && survivors[static_cast<std::size_t>(idx)] > g) --idx;
      prev_clique[static_cast<std::size_t>(g)] = idx < 0 ? k - 1 : idx;
    }
  }

  cycle.membership_.resize(static_cast<std::size_t>(n));
  cycle.left_.resize(static_cast<std::size_t>(n));
  cycle.right_.resize(static_cast<std::size_t>(n));
  cycle.dominating_.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    const Arc& a = model.arcs[static_cast<std::size_t>(v)];
    const int first = next_clique[static_cast<std::size_t>(a.start)];
    const int last = prev_clique[static_cast<std::size_t>(mod(a.end - 1, size))];
    if (!model.covers_gap(v, survivors[static_cast<std::size_t>(first)]) ||
        !model.covers_gap(v, survivors[static_cast<std::size_t>(last)])) {
      throw Error(ErrorCode::kInternal, "vertex " + std::to_string(v) + " lies in no point-clique");
    }
    cycle.membership_[static_cast<std::size_t>(v)] = {first, last};
    for (int c = first;; c = c + 1 == k ? 0 : c + 1) {
      cycle.members_[static_cast<std::size_t>(c)].push_back(v);
      if (c == last) break;
    }
    cycle.left_[static_cast<std::size_t>(v)] = first;
    cycle.right_[static_cast<std::size_t>(v)] = last;
    if (graph.degree(v) == n - 1) {
      cycle.dominating_[static_cast<std::size_t>(v)] = 1;
      cycle.left_[static_cast<std::size_t>(v)] = cycle.order_.successor(cycle.unification_clique());
      cycle.right_[static_cast<std::size_t>(v)] = cycle.unification_clique();
    }
  }
  return cycle;
}

namespace {

void check_common_clique(const CliqueCycle& cycle, int v, int w, int at) {
  if (at < 0 || at >= cycle.clique_count() || !cycle.in_clique(v, at) || !cycle.in_clique(w, at)) {
    throw Error(ErrorCode::kInvalidArgument, "clique " + std::to_string(at) + " does not contain both " +
                                                 std::to_string(v) + " and " + std::to_string(w));
  }
  if (cycle.are_counter(v, w)) {
    throw Error(ErrorCode::kUndefinedComparison,
                std::to_string(v) + " and " + std::to_string(w) + " are counter vertices");
  }
}

Reach compare(int reach_v, int reach_w) {
  if (reach_w > reach_v) return Reach::kFurther;
  if (reach_w == reach_v) return Reach::kEqual;
  return Reach::kLess;
}

}  // namespace

Reach reaches_further_left(const CliqueCycle& cycle, int v, int w, int at) {
  check_common_clique(cycle, v, w, at);
  return compare(cycle.steps(cycle.left_clique(v), at), cycle.steps(cycle.left_clique(w), at));
}

Reach reaches_further_right(const CliqueCycle& cycle, int v, int w, int at) {
  check_common_clique(cycle, v, w, at);
  return compare(cycle.steps(at, cycle.right_clique(v)), cycle.steps(at, cycle.right_clique(w)));
}

std::string dump_clique_cycle(const CliqueCycle& cycle) {
  std::ostringstream out;
  for (int c = 0; c < cycle.clique_count(); ++c) {
    out << c << ": {";
    const char* sep = "";
    for (int v : cycle.members(c)) {
      out << sep << v;
      sep = ",";
    }
    out << "}\n";
  }
  for (int v = 0; v < cycle.vertex_count(); ++v) {
    out << v << ": lc=" << cycle.left_clique(v) << " rc=" << cycle.right_clique(v) << "\n";
  }
  return out.str();
}

}  // namespace carc
