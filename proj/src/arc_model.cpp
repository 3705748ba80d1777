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

#include "carc/arc_model.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "carc/error.hpp"
#include "json.hpp"

namespace carc {

namespace {

int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int ArcModel::gap_count(int v) const {
  const Arc& a = arcs[static_cast<std::size_t>(v)];
  return mod(a.end - a.start, circle_size());
}

bool ArcModel::covers_gap(int v, int gap) const {
  return mod(gap - arcs[static_cast<std::size_t>(v)].start, circle_size()) < gap_count(v);
}

void validate_model(const ArcModel& model) {
  if (model.n < 1) throw Error(ErrorCode::kMalformedInput, "model must contain at least one arc");
  if (static_cast<int>(model.arcs.size()) != model.n) {
    throw Error(ErrorCode::kMalformedInput,
                "model declares n=" + std::to_string(model.n) + " but lists " +
                    std::to_string(model.arcs.size()) + " arcs");
  }
  const int size = model.circle_size();
  std::vector<int> owner(static_cast<std::size_t>(size), -1);
  for (int v = 0; v < model.n; ++v) {
    const Arc& a = model.arcs[static_cast<std::size_t>(v)];
    for (int p : {a.start, a.end}) {
      if (p < 0 || p >= size) {
        throw Error(ErrorCode::kPositionOutOfRange,
                    "arc " + std::to_string(v) + ": position " + std::to_string(p) +
                        " outside [0," + std::to_string(size) + ")");
      }
    }
    if (a.start == a.end) {
      throw Error(ErrorCode::kDegenerateArc, "arc " + std::to_string(v) + " starts and ends at " +
                                                 std::to_string(a.start));
    }
    for (int p : {a.start, a.end}) {
      int& o = owner[static_cast<std::size_t>(p)];
      if (o != -1) {
        throw Error(ErrorCode::kDuplicateEndpoint,
                    "duplicate endpoint " + std::to_string(p) + " (arcs " + std::to_string(o) +
                        " and " + std::to_string(v) + ")");
      }
      o = v;
    }
  }
}

ArcModel parse_model(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("model is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("arcs")) {
    throw Error(ErrorCode::kMalformedInput, R"(model must be an object with "n" and "arcs")");
  }
  if (!doc["n"].is_number_integer() || !doc["arcs"].is_array()) {
    throw Error(ErrorCode::kMalformedInput, R"("n" must be an integer and "arcs" an array)");
  }
  ArcModel model;
  model.n = doc["n"].get<int>();
  for (const auto& entry : doc["arcs"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer()) {
      throw Error(ErrorCode::kMalformedInput, "each arc must be a pair of integers");
    }
    model.arcs.push_back({entry[0].get<int>(), entry[1].get<int>()});
  }
  validate_model(model);
  return model;
}

std::string model_to_json(const ArcModel& model) {
  nlohmann::ordered_json doc;
  doc["n"] = model.n;
  auto arcs = nlohmann::ordered_json::array();
  for (const Arc& a : model.arcs) arcs.push_back({a.start, a.end});
  doc["arcs"] = std::move(arcs);
  return doc.dump();
}

bool is_real(const ArcModel& model) {
  const int size = model.circle_size();
  std::vector<int> diff(static_cast<std::size_t>(size) + 1, 0);
  int wrapping = 0;
  for (const Arc& a : model.arcs) {
    if (a.start < a.end) {
      ++diff[static_cast<std::size_t>(a.start)];
      --diff[static_cast<std::size_t>(a.end)];
    } else {
      ++diff[static_cast<std::size_t>(a.start)];
      ++wrapping;  // covers gaps 0..end-1 as well
      --diff[static_cast<std::size_t>(a.end)];
    }
  }
  int cover = wrapping;
  for (int g = 0; g < size; ++g) {
    cover += diff[static_cast<std::size_t>(g)];
    if (cover <= 0) return false;
  }
  return true;
}

Graph::Graph(int n)
    : n_(n),
      words_per_row_((n + 63) / 64),
      adjacency_(static_cast<std::size_t>(n)),
      matrix_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64), 0) {}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  g.finalize();
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const std::size_t word = static_cast<std::size_t>(u) * static_cast<std::size_t>(words_per_row_) +
                           static_cast<std::size_t>(v / 64);
  return (matrix_[word] >> (v % 64)) & 1U;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
  }
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "self-loops are not allowed");
  if (adjacent(u, v)) return;
  auto set = [&](int a, int b) {
    matrix_[static_cast<std::size_t>(a) * static_cast<std::size_t>(words_per_row_) +
            static_cast<std::size_t>(b / 64)] |= std::uint64_t{1} << (b % 64);
    adjacency_[static_cast<std::size_t>(a)].push_back(b);
  };
  set(u, v);
  set(v, u);
  ++edge_count_;
}

void Graph::finalize() {
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

Graph intersection_graph(const ArcModel& model) {
  const int n = model.n;
  const int size = model.circle_size();
  Graph g(n);
  std::vector<int> len(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) len[static_cast<std::size_t>(v)] = model.gap_count(v);
  for (int u = 0; u < n; ++u) {
    const int su = model.arcs[static_cast<std::size_t>(u)].start;
    for (int v = u + 1; v < n; ++v) {
      const int sv = model.arcs[static_cast<std::size_t>(v)].start;
      if (mod(sv - su, size) < len[static_cast<std::size_t>(u)] ||
          mod(su - sv, size) < len[static_cast<std::size_t>(v)]) {
        g.add_edge(u, v);
      }
    }
  }
  g.finalize();
  return g;
}

std::vector<int> bfs_distances(const Graph& graph, int source) {
  if (source < 0 || source >= graph.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bfs source out of range");
  }
  std::vector<int> dist(static_cast<std::size_t>(graph.size()), kUnreachableDistance);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(graph.size()));
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int y : graph.neighbors(x)) {
      if (dist[static_cast<std::size_t>(y)] == kUnreachableDistance) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& graph) : n_(graph.size()) {
  dist_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (int s = 0; s < n_; ++s) {
    const auto row = bfs_distances(graph, s);
    dist_.insert(dist_.end(), row.begin(), row.end());
  }
}

namespace {

template <typename DistToW>
std::vector<int> first_vertices_impl(const Graph& graph, int u, int w, DistToW dist_to_w) {
  if (u == w) throw Error(ErrorCode::kInvalidArgument, "first vertices need distinct endpoints");
  const int d = dist_to_w(u);
  if (d == kUnreachableDistance) {
    throw Error(ErrorCode::kUnreachable,
                "vertex " + std::to_string(w) + " unreachable from " + std::to_string(u));
  }
  std::vector<int> out;
  for (int v : graph.neighbors(u)) {
    if (dist_to_w(v) == d - 1) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<int> first_vertices(const Graph& graph, int u, int w) {
  if (w < 0 || w >= graph.size() || u < 0 || u >= graph.size()) {
    throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
  }
  const auto dist = bfs_distances(graph, w);
  return first_vertices_impl(graph, u, w, [&](int x) { return dist[static_cast<std::size_t>(x)]; });
}

std::vector<int> first_vertices(const Graph& graph, const DistanceMatrix& dist, int u, int w) {
  return first_vertices_impl(graph, u, w, [&](int x) { return dist(x, w); });
}

std::vector<int> dominating_vertices(const Graph& graph) {
  std::vector<int> out;
  for (int v = 0; v < graph.size(); ++v) {
    if (graph.degree(v) == graph.size() - 1) out.push_back(v);
  }
  return out;
}

}  // namespace carc
