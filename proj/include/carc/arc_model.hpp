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

#ifndef CARC_ARC_MODEL_HPP_
#define CARC_ARC_MODEL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carc {

// One arc of a model. It runs clockwise from `start` to `end` and covers the
// open gaps start, start+1, ..., end-1 (mod 2n), where gap g lies between
// endpoint positions g and g+1.
struct Arc {
  int start = 0;
  int end = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// n arcs on a discrete circle with 2n endpoint positions. Vertex i is arcs[i].
struct ArcModel {
  int n = 0;
  std::vector<Arc> arcs;

  int circle_size() const { return 2 * n; }
  // Number of gaps covered by arc v, in [1, 2n).
  int gap_count(int v) const;
  bool covers_gap(int v, int gap) const;

  friend bool operator==(const ArcModel&, const ArcModel&) = default;
};

// Throws carc::Error (kDuplicateEndpoint, kPositionOutOfRange, kDegenerateArc,
// kMalformedInput) if the model breaks an invariant.
void validate_model(const ArcModel& model);

// Parses `{"n": <int>, "arcs": [[s,e], ...]}` and validates the result.
ArcModel parse_model(std::string_view text);
// Canonical compact serialization, e.g. {"n":1,"arcs":[[0,1]]}.
std::string model_to_json(const ArcModel& model);

// True iff every gap of the circle is covered by some arc.
bool is_real(const ArcModel& model);

// Undirected simple graph over 0..n-1 with sorted adjacency lists and an
// O(1) adjacency test.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Builds from an edge list; duplicate edges are ignored, loops rejected.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int size() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }
  std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(int u, int v) const;

  // Adds {u,v}; callers must call finalize() before querying neighbors().
  void add_edge(int u, int v);
  void finalize();

 private:
  int n_ = 0;
  int words_per_row_ = 0;
  std::int64_t edge_count_ = 0;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint64_t> matrix_;
};

Graph intersection_graph(const ArcModel& model);

inline constexpr int kUnreachableDistance = -1;

// Hop counts from `source`; kUnreachableDistance for other components.
std::vector<int> bfs_distances(const Graph& graph, int source);

// Row-major all-pairs hop counts.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& graph);

  int size() const { return n_; }
  int operator()(int u, int w) const {
    return dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(w)];
  }

 private:
  int n_ = 0;
  std::vector<int> dist_;
};

// Neighbours v of u with dist(v,w) = dist(u,w) - 1. Throws kUnreachable when
// w cannot be reached from u and kInvalidArgument when u == w.
std::vector<int> first_vertices(const Graph& graph, int u, int w);
std::vector<int> first_vertices(const Graph& graph, const DistanceMatrix& dist, int u, int w);

// Vertices adjacent to every other vertex, ascending.
std::vector<int> dominating_vertices(const Graph& graph);

}  // namespace carc

#endif  // CARC_ARC_MODEL_HPP_
