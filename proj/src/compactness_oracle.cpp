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

#include "carc/compactness_oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "carc/error.hpp"

namespace carc {
namespace {

// A maximal run of the scanned sequence routed over one arc.
struct Segment {
  int begin = 0;  // index into the scanned sequence
  int end = 0;    // exclusive
  int arc = 0;    // neighbour index of v
};

// Decides whether `masks` (first-vertex sets as neighbour-index bitmasks, in
// scan order) splits into runs with pairwise distinct arcs, each run sharing
// its arc. Extending each run as far as it goes is never worse, so the
// search branches only on the arc.
class Segmenter {
 public:
  Segmenter(const std::vector<std::uint32_t>& masks, int degree)
      : masks_(masks), degree_(degree),
        failed_(masks.size() * (std::size_t{1} << degree), 0) {}

  bool solve(std::vector<Segment>& out) {
    out.clear();
    return search(0, 0, out);
  }

 private:
  bool search(int pos, std::uint32_t used, std::vector<Segment>& out) {
    const int m = static_cast<int>(masks_.size());
    if (pos == m) return true;
    const std::size_t key = static_cast<std::size_t>(pos) * (std::size_t{1} << degree_) + used;
    if (failed_[key]) return false;
    std::uint32_t options = masks_[static_cast<std::size_t>(pos)] & ~used;
    while (options != 0) {
      const int arc = std::countr_zero(options);
      options &= options - 1;
      const std::uint32_t bit = std::uint32_t{1} << arc;
      int end = pos + 1;
      while (end < m && (masks_[static_cast<std::size_t>(end)] & bit)) ++end;
      out.push_back({pos, end, arc});
      if (search(end, used | bit, out)) return true;
      out.pop_back();
    }
    failed_[key] = 1;
    return false;
  }

  const std::vector<std::uint32_t>& masks_;
  int degree_;
  std::vector<char> failed_;
};

}  // namespace

OracleResult has_shortest_path_1irs(const Graph& graph, const OracleOptions& options) {
  const int n = graph.size();
  if (n > options.vertex_limit) {
    throw Error(ErrorCode::kLimitExceeded, "oracle refuses " + std::to_string(n) +
                                               " vertices (limit " + std::to_string(options.vertex_limit) + ")");
  }
  const auto started = std::chrono::steady_clock::now();
  const DistanceMatrix dist(graph);
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w) {
      if (dist(u, w) == kUnreachableDistance) throw Error(ErrorCode::kInvalidArgument, "oracle needs a connected graph");
    }
  }

  // first[v][u]: bit i set when neighbors(v)[i] starts a shortest v-u path.
  std::vector<std::vector<std::uint32_t>> first(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
  for (int v = 0; v < n; ++v) {
    const auto nbrs = graph.neighbors(v);
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (dist(nbrs[i], u) == dist(v, u) - 1) first[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] |= std::uint32_t{1} << i;
      }
    }
  }

  OracleResult result;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(static_cast<std::size_t>(n));
  std::vector<std::uint32_t> masks;
  std::vector<int> scanned;
  std::vector<std::vector<Segment>> plan(static_cast<std::size_t>(n));
  std::vector<int> plan_offset(static_cast<std::size_t>(n));
  std::vector<Segment> segments;

  const auto feasible = [&](int v) {
    const std::size_t sv = static_cast<std::size_t>(v);
    const int m = n - 1;
    const int degree = static_cast<int>(graph.neighbors(v).size());
    // In strict mode runs may not pass over v, so only the cut at v is tried.
    const int cuts = options.strict ? 1 : m;
    for (int cut = 0; cut < cuts; ++cut) {
      masks.clear();
      for (int k = 0; k < m; ++k) {
        const int u = order[static_cast<std::size_t>((pos[sv] + 1 + (cut + k) % m) % n)];
        masks.push_back(first[sv][static_cast<std::size_t>(u)]);
      }
      Segmenter seg(masks, degree);
      if (seg.solve(segments)) {
        plan[sv] = segments;
        plan_offset[sv] = cut;
        return true;
      }
    }
    return false;
  };

  do {
    if (n >= 3 && order[1] > order[static_cast<std::size_t>(n - 1)]) continue;
    ++result.orders_examined;
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = feasible(v);
    if (!ok) continue;

    std::vector<std::vector<ArcLabel>> arcs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const std::size_t sv = static_cast<std::size_t>(v);
      const auto nbrs = graph.neighbors(v);
      for (const int w : nbrs) arcs[sv].push_back({w, {}});
      const int m = n - 1;
      const auto at = [&](int k) {
        return order[static_cast<std::size_t>((pos[sv] + 1 + (plan_offset[sv] + k) % m) % n)];
      };
      for (const Segment& s : plan[sv]) {
        arcs[sv][static_cast<std::size_t>(s.arc)].intervals.push_back({at(s.begin), at(s.end - 1)});
      }
    }
    result.exists_1irs = true;
    result.witness_order = CyclicOrder(order);
    result.witness_labels = RoutingScheme(CyclicOrder(order), std::move(arcs));
    break;
  } while (std::next_permutation(order.begin() + 1, order.end()));

  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace carc
